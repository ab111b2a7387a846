import fs from "node:fs";
import Papa from "papaparse";

/** Raised for any missing or malformed data file; carries the offending path. */
export class DataFileError extends Error {
  constructor(
    public readonly path: string,
    detail: string,
  ) {
    super(`${path}: ${detail}`);
    this.name = "DataFileError";
  }
}

export interface Table {
  header: string[];
  rows: number[][];
}

/** Read an all-numeric CSV with a header row. */
export function readCsv(path: string): Table {
  if (!fs.existsSync(path)) {
    throw new DataFileError(path, "file not found");
  }
  const text = fs.readFileSync(path, "utf-8");
  const parsed = Papa.parse<string[]>(text.trim(), { delimiter: ",", skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new DataFileError(path, `CSV parse error: ${e.message} (row ${e.row})`);
  }
  const data = parsed.data;
  if (data.length < 2) {
    throw new DataFileError(path, "no data rows");
  }
  const header = data[0];
  const rows: number[][] = [];
  for (let i = 1; i < data.length; i++) {
    const raw = data[i];
    if (raw.length !== header.length) {
      throw new DataFileError(path, `row ${i + 1} has ${raw.length} fields, expected ${header.length}`);
    }
    rows.push(
      raw.map((cell, j) => {
        const v = Number(cell);
        if (cell.trim() === "" || !Number.isFinite(v)) {
          throw new DataFileError(path, `non-numeric value "${cell}" in column ${header[j]}, row ${i + 1}`);
        }
        return v;
      }),
    );
  }
  return { header, rows };
}

export function column(table: Table, name: string, path: string): number[] {
  const k = table.header.indexOf(name);
  if (k < 0) {
    throw new DataFileError(path, `missing column "${name}" (have: ${table.header.join(", ")})`);
  }
  return table.rows.map((r) => r[k]);
}
