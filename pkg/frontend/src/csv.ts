/**
 * Minimal RFC 4180 CSV reader for the benchmark result files.
 *
 * The harness quotes fields that contain commas (error flags can), so the
 * parser honours double-quoted fields with embedded commas, quotes and
 * newlines.
 */

export interface CsvTable {
  header: string[];
  records: Record<string, string>[];
}

export function parseCsv(text: string): CsvTable {
  const rows: string[][] = [];
  let field = "";
  let row: string[] = [];
  let inQuotes = false;
  let i = 0;
  const pushField = () => {
    row.push(field);
    field = "";
  };
  const pushRow = () => {
    pushField();
    rows.push(row);
    row = [];
  };
  while (i < text.length) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
          continue;
        }
        inQuotes = false;
        i += 1;
        continue;
      }
      field += ch;
      i += 1;
      continue;
    }
    if (ch === '"') {
      inQuotes = true;
      i += 1;
    } else if (ch === ",") {
      pushField();
      i += 1;
    } else if (ch === "\r") {
      i += 1;
    } else if (ch === "\n") {
      pushRow();
      i += 1;
    } else {
      field += ch;
      i += 1;
    }
  }
  if (field.length > 0 || row.length > 0) {
    pushRow();
  }
  if (rows.length === 0) {
    throw new Error("CSV input is empty");
  }
  const header = rows[0];
  const records = rows.slice(1).map((values, index) => {
    if (values.length !== header.length) {
      throw new Error(
        `CSV row ${index + 2} has ${values.length} fields, expected ${header.length}`,
      );
    }
    const record: Record<string, string> = {};
    header.forEach((name, col) => {
      record[name] = values[col];
    });
    return record;
  });
  return { header, records };
}

/** Throw when a required column is absent, naming the first missing one. */
export function requireColumns(header: string[], names: string[]): void {
  for (const name of names) {
    if (!header.includes(name)) {
      throw new Error(`column '${name}' missing from CSV header`);
    }
  }
}
