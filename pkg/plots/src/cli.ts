#!/usr/bin/env node
import process from "node:process";
import { DataFileError } from "./csv.js";
import { render } from "./figures.js";

const USAGE = `usage: plots render <figure-id 1..5> --data-dir DIR --out FILE.svg

Renders the CSV/manifest output of \`tiltwell figure N\` into an SVG image.
Exit codes: 0 ok, 1 missing/malformed data, 2 bad arguments.`;

function fail(code: number, message: string): never {
  console.error(message);
  process.exit(code);
}

export function main(argv: string[]): void {
  if (argv.length === 0 || argv[0] === "--help" || argv[0] === "-h") {
    console.log(USAGE);
    process.exit(argv.length === 0 ? 2 : 0);
  }
  if (argv[0] !== "render") {
    fail(2, `unknown command "${argv[0]}"\n${USAGE}`);
  }
  let figureId: number | undefined;
  let dataDir: string | undefined;
  let outFile: string | undefined;
  const rest = argv.slice(1);
  for (let i = 0; i < rest.length; i++) {
    const arg = rest[i];
    if (arg === "--data-dir") {
      dataDir = rest[++i];
    } else if (arg === "--out") {
      outFile = rest[++i];
    } else if (!arg.startsWith("-") && figureId === undefined) {
      figureId = Number(arg);
    } else {
      fail(2, `unexpected argument "${arg}"\n${USAGE}`);
    }
  }
  if (
    figureId === undefined ||
    !Number.isInteger(figureId) ||
    dataDir === undefined ||
    outFile === undefined
  ) {
    fail(2, USAGE);
  }
  try {
    render(figureId, dataDir, outFile);
    console.log(`wrote ${outFile}`);
  } catch (err) {
    if (err instanceof DataFileError) {
      fail(1, err.message);
    }
    if (err instanceof RangeError) {
      fail(2, err.message);
    }
    throw err;
  }
}

main(process.argv.slice(2));
