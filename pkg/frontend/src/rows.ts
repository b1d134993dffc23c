/**
 * Experiment CSV schema: parsing and validation.
 *
 * The CSV comes from the Python package's experiment commands. Fields are
 * shortest round-trip decimals ("inf" for the flagged infinite values),
 * absent quantities are empty strings, and `flags` is a ;-joined list.
 */

import Papa from "papaparse";

export const COLUMNS = [
  "experiment",
  "poly",
  "e_or_j",
  "s",
  "cond",
  "err_dc",
  "err_vs",
  "bound_dc",
  "bound_vs",
  "bound_improved",
  "bound_naive",
  "flags",
] as const;

export type ColumnName = (typeof COLUMNS)[number];

export interface ExperimentRow {
  experiment: string;
  poly: string;
  eOrJ: number;
  s: number;
  cond: number | null;
  errDc: number | null;
  errVs: number | null;
  boundDc: number | null;
  boundVs: number | null;
  boundImproved: number | null;
  boundNaive: number | null;
  flags: string[];
}

/** Raised when the CSV does not have the expected shape; names the column. */
export class SchemaError extends Error {}

function parseOptionalNumber(column: ColumnName, text: string, line: number): number | null {
  if (text === "") return null;
  if (text === "inf") return Infinity;
  if (text === "-inf") return -Infinity;
  const value = Number(text);
  if (Number.isNaN(value)) {
    throw new SchemaError(`line ${line}: column "${column}" is not a number: "${text}"`);
  }
  return value;
}

function requireNumber(column: ColumnName, text: string, line: number): number {
  const value = parseOptionalNumber(column, text, line);
  if (value === null) {
    throw new SchemaError(`line ${line}: column "${column}" must not be empty`);
  }
  return value;
}

export function parseExperimentCsv(text: string): ExperimentRow[] {
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new SchemaError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  const fields = parsed.meta.fields ?? [];
  for (const column of COLUMNS) {
    if (!fields.includes(column)) {
      throw new SchemaError(`missing column "${column}"`);
    }
  }

  return parsed.data.map((record, i) => {
    const line = i + 2; // 1-based, after the header
    return {
      experiment: record.experiment,
      poly: record.poly,
      eOrJ: Math.trunc(requireNumber("e_or_j", record.e_or_j, line)),
      s: requireNumber("s", record.s, line),
      cond: parseOptionalNumber("cond", record.cond, line),
      errDc: parseOptionalNumber("err_dc", record.err_dc, line),
      errVs: parseOptionalNumber("err_vs", record.err_vs, line),
      boundDc: parseOptionalNumber("bound_dc", record.bound_dc, line),
      boundVs: parseOptionalNumber("bound_vs", record.bound_vs, line),
      boundImproved: parseOptionalNumber("bound_improved", record.bound_improved, line),
      boundNaive: parseOptionalNumber("bound_naive", record.bound_naive, line),
      flags: record.flags === "" ? [] : record.flags.split(";"),
    };
  });
}
