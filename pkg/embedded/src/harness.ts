/**
 * Parity harness: classify every golden record and compare with the
 * expected indices. Exit code 0 means zero mismatches, 1 means at least
 * one, 2 means the inputs could not be used.
 */
import { readFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import process from "node:process";

import { parseGolden } from "./golden.js";
import { parseModelData } from "./model.js";
import { Predictor } from "./predict.js";

export function runHarness(
  modelPath: string,
  goldenPath: string,
  log: (line: string) => void,
): number {
  const model = parseModelData(readFileSync(modelPath, "utf8"));
  const golden = parseGolden(readFileSync(goldenPath, "utf8"));
  if (golden.featureCount !== model.featureCount) {
    log(
      `feature count mismatch: model has ${model.featureCount}, ` +
        `golden has ${golden.featureCount}`,
    );
    return 2;
  }
  const predictor = new Predictor(model);
  let mismatches = 0;
  for (let i = 0; i < golden.recordCount; i++) {
    const got = predictor.predict(golden.inputs, i * golden.featureCount);
    const want = golden.expected[i] as number;
    if (got !== want) {
      mismatches += 1;
      if (mismatches <= 10) {
        log(
          `record ${i}: predicted ${got} (${model.classes[got] ?? "?"}), ` +
            `expected ${want} (${model.classes[want] ?? "?"})`,
        );
      }
    }
  }
  log(`${golden.recordCount} records, ${mismatches} mismatches`);
  return mismatches === 0 ? 0 : 1;
}

function main(argv: readonly string[]): number {
  const modelPath = argv[0];
  const goldenPath = argv[1];
  if (modelPath === undefined || goldenPath === undefined || argv.length !== 2) {
    console.error("usage: node harness.js <sefr_model_data.h> <sefr_golden.txt>");
    return 2;
  }
  try {
    return runHarness(modelPath, goldenPath, (line) => console.log(line));
  } catch (err) {
    console.error(err instanceof Error ? err.message : String(err));
    return 2;
  }
}

const entry = process.argv[1];
if (entry !== undefined && import.meta.url === pathToFileURL(entry).href) {
  process.exit(main(process.argv.slice(2)));
}
