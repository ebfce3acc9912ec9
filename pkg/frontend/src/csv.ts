/** CSV ingestion for run-directory tables.
 *
 * Tables are small (sweep outputs), so everything is loaded eagerly and
 * validated up front: a header row is mandatory, requesting a column that
 * is not there raises MissingColumnError, and numeric extraction rejects
 * anything that does not parse as a finite float.
 */

import { readFileSync, existsSync } from "node:fs";
import Papa from "papaparse";

import {
  BadNumberError,
  EmptyCsvError,
  MissingColumnError,
  MissingFileError,
} from "./errors.js";

export class Table {
  readonly path: string;
  readonly header: string[];
  readonly rows: string[][];

  constructor(path: string, header: string[], rows: string[][]) {
    this.path = path;
    this.header = header;
    this.rows = rows;
  }

  get rowCount(): number {
    return this.rows.length;
  }

  has(column: string): boolean {
    return this.header.includes(column);
  }

  /** Index of a column, or a named error listing what is present. */
  columnIndex(column: string): number {
    const idx = this.header.indexOf(column);
    if (idx < 0) {
      throw new MissingColumnError(this.path, column, this.header);
    }
    return idx;
  }

  /** One column as finite floats. */
  numbers(column: string): number[] {
    const idx = this.columnIndex(column);
    return this.rows.map((row, i) => {
      const raw = row[idx] ?? "";
      const value = Number(raw);
      if (raw.trim() === "" || !Number.isFinite(value)) {
        throw new BadNumberError(this.path, column, raw, i + 1);
      }
      return value;
    });
  }

  /** One column as raw strings (for tag columns such as design names). */
  strings(column: string): string[] {
    const idx = this.columnIndex(column);
    return this.rows.map((row) => row[idx] ?? "");
  }
}

export function readTable(path: string): Table {
  if (!existsSync(path)) {
    throw new MissingFileError(path);
  }
  const text = readFileSync(path, "utf-8");
  const parsed = Papa.parse<string[]>(text, {
    delimiter: ",",
    skipEmptyLines: true,
  });
  const grid = parsed.data.filter((row) => row.length > 0);
  if (grid.length === 0) {
    throw new EmptyCsvError(path);
  }
  const header = grid[0]!.map((cell) => cell.trim());
  const rows = grid.slice(1);
  if (rows.length === 0) {
    throw new EmptyCsvError(path);
  }
  return new Table(path, header, rows);
}
