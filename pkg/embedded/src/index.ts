export { parseModelData } from "./model.js";
export type { ExportedModel } from "./model.js";
export { parseGolden } from "./golden.js";
export type { GoldenSet } from "./golden.js";
export { Predictor } from "./predict.js";
export { runHarness } from "./harness.js";
