/**
 * Parser for golden fixture files: a header line
 * `SEFR-GOLDEN 1 <records> <features>`, then one record per line as
 * space-separated feature bytes with the expected class index last.
 */

export interface GoldenSet {
  readonly recordCount: number;
  readonly featureCount: number;
  /** Row-major, recordCount x featureCount. */
  readonly inputs: Uint8Array;
  readonly expected: Uint8Array;
}

const MAGIC = "SEFR-GOLDEN 1";

function parseByte(raw: string, context: string): number {
  const value = Number.parseInt(raw, 10);
  if (!Number.isInteger(value) || value < 0 || value > 255 || String(value) !== raw) {
    throw new Error(`${context}: ${raw} is not a byte`);
  }
  return value;
}

export function parseGolden(text: string): GoldenSet {
  const lines = text.split("\n").filter((line) => line.trim().length > 0);
  const header = lines[0];
  if (header === undefined || !header.startsWith(`${MAGIC} `)) {
    throw new Error("not a golden fixture file");
  }
  const fields = header.split(/\s+/);
  if (fields.length !== 4) {
    throw new Error(`bad golden header: ${header}`);
  }
  const recordCount = Number.parseInt(fields[2] as string, 10);
  const featureCount = Number.parseInt(fields[3] as string, 10);
  if (!(recordCount >= 1) || !(featureCount >= 1)) {
    throw new Error(`bad golden header counts: ${header}`);
  }
  if (lines.length - 1 !== recordCount) {
    throw new Error(
      `header says ${recordCount} records, file has ${lines.length - 1}`,
    );
  }

  const inputs = new Uint8Array(recordCount * featureCount);
  const expected = new Uint8Array(recordCount);
  for (let i = 0; i < recordCount; i++) {
    const parts = (lines[i + 1] as string).trim().split(/\s+/);
    if (parts.length !== featureCount + 1) {
      throw new Error(
        `record ${i} has ${parts.length} fields, expected ${featureCount + 1}`,
      );
    }
    for (let j = 0; j < featureCount; j++) {
      inputs[i * featureCount + j] = parseByte(parts[j] as string, `record ${i}`);
    }
    expected[i] = parseByte(parts[featureCount] as string, `record ${i} expected index`);
  }
  return { recordCount, featureCount, inputs, expected };
}
