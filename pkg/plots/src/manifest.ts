import fs from "node:fs";
import path from "node:path";
import { DataFileError } from "./csv.js";

export interface DensityEntry {
  path: string;
  kind: "density";
  columns: string[];
  n_atoms: number;
  t_min: number;
  t_max: number;
}

export interface CurveEntry {
  path: string;
  kind: "curves";
  columns: string[];
  [key: string]: unknown;
}

export type FileEntry = DensityEntry | CurveEntry;

export interface Manifest {
  figure: number;
  params: Record<string, unknown>;
  files: FileEntry[];
}

function isRecord(x: unknown): x is Record<string, unknown> {
  return typeof x === "object" && x !== null && !Array.isArray(x);
}

/** Load and validate the manifest.json of one figure data directory. */
export function readManifest(dataDir: string): Manifest {
  const file = path.join(dataDir, "manifest.json");
  if (!fs.existsSync(file)) {
    throw new DataFileError(file, "file not found");
  }
  let doc: unknown;
  try {
    doc = JSON.parse(fs.readFileSync(file, "utf-8"));
  } catch (err) {
    throw new DataFileError(file, `invalid JSON: ${(err as Error).message}`);
  }
  if (!isRecord(doc) || typeof doc.figure !== "number" || !Array.isArray(doc.files)) {
    throw new DataFileError(file, "manifest needs a numeric `figure` and a `files` array");
  }
  for (const entry of doc.files) {
    if (!isRecord(entry) || typeof entry.path !== "string" || !Array.isArray(entry.columns)) {
      throw new DataFileError(file, "each files[] entry needs `path` and `columns`");
    }
    if (entry.kind === "density") {
      for (const key of ["n_atoms", "t_min", "t_max"]) {
        if (typeof entry[key] !== "number") {
          throw new DataFileError(file, `density entry ${entry.path} is missing numeric \`${key}\``);
        }
      }
    } else if (entry.kind !== "curves") {
      throw new DataFileError(file, `unknown file kind "${String(entry.kind)}" for ${entry.path}`);
    }
  }
  return doc as unknown as Manifest;
}

export function densityEntries(manifest: Manifest): DensityEntry[] {
  return manifest.files.filter((f): f is DensityEntry => f.kind === "density");
}

export function curveEntry(manifest: Manifest, name: string, dataDir: string): CurveEntry {
  const entry = manifest.files.find((f) => f.path === name);
  if (!entry || entry.kind !== "curves") {
    throw new DataFileError(path.join(dataDir, "manifest.json"), `no curves entry "${name}"`);
  }
  return entry;
}
