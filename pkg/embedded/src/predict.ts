/**
 * Reference predictor over exported model data.
 *
 * Mirrors what a microcontroller port does with the same arrays: each
 * input byte dequantizes as byte / 255 in 32-bit float, every score
 * accumulates left to right through a single 32-bit accumulator, and
 * the predicted index is `score > 0` for one-hyperplane models or the
 * first minimum across per-class scores otherwise.
 */
import type { ExportedModel } from "./model.js";

export class Predictor {
  readonly featureCount: number;
  readonly scoreCount: number;
  private readonly weights: Float32Array;
  private readonly biases: Float32Array;

  constructor(model: ExportedModel) {
    if (model.weights.length !== model.scoreCount * model.featureCount) {
      throw new Error("weight array does not match the declared shape");
    }
    if (model.biases.length !== model.scoreCount) {
      throw new Error("bias array does not match the declared shape");
    }
    this.featureCount = model.featureCount;
    this.scoreCount = model.scoreCount;
    this.weights = model.weights;
    this.biases = model.biases;
  }

  // Device-analog hot path: scalar locals only, nothing heap-allocated.
  // test/no_alloc.test.ts enforces the constraint by source inspection.
  /* alloc-free-begin */

  /**
   * 32-bit float score of hyperplane `row` against featureCount bytes
   * starting at `offset`. Callers keep offsets in bounds.
   */
  score(row: number, input: Uint8Array, offset: number): number {
    const m = this.featureCount;
    const w = this.weights;
    const base = row * m;
    let acc = 0;
    for (let j = 0; j < m; j++) {
      const x = Math.fround((input[offset + j] as number) / 255);
      acc = Math.fround(acc + Math.fround((w[base + j] as number) * x));
    }
    return Math.fround(acc + (this.biases[row] as number));
  }

  /** Predicted class index for one record of featureCount bytes. */
  predict(input: Uint8Array, offset = 0): number {
    if (this.scoreCount === 1) {
      // one hyperplane: index 1 is the positive side, ties fall negative
      return this.score(0, input, offset) > 0 ? 1 : 0;
    }
    let bestIndex = 0;
    let best = this.score(0, input, offset);
    for (let s = 1; s < this.scoreCount; s++) {
      const value = this.score(s, input, offset);
      if (value < best) {
        best = value;
        bestIndex = s;
      }
    }
    return bestIndex;
  }

  /* alloc-free-end */
}
