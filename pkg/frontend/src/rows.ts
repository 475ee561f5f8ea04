/** Typed view of one benchmark result row. */

import { CsvTable, requireColumns } from "./csv.js";

export interface ResultRow {
  model: string;
  method: string;
  seed: number;
  ari: number | null;
  flags: string;
  /** Numeric sweep/model parameters present in the file (p, eta, c, ...). */
  params: Record<string, number>;
}

const PARAM_COLUMNS = ["n", "K", "p", "eta", "c", "epsilon", "pareto_exponent"];

export function toResultRows(table: CsvTable): ResultRow[] {
  requireColumns(table.header, ["model", "method", "seed", "ari", "flags"]);
  return table.records.map((record) => {
    const params: Record<string, number> = {};
    for (const name of PARAM_COLUMNS) {
      const raw = record[name];
      if (raw !== undefined && raw !== "") {
        params[name] = Number(raw);
      }
    }
    return {
      model: record.model,
      method: record.method,
      seed: Number(record.seed),
      ari: record.ari === "" ? null : Number(record.ari),
      flags: record.flags ?? "",
      params,
    };
  });
}

/** Rows with a usable score, e.g. skipping errored trials. */
export function scoredRows(rows: ResultRow[]): ResultRow[] {
  return rows.filter((row) => row.ari !== null && Number.isFinite(row.ari));
}
