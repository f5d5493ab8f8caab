import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

// The predictor promises a hot path with no heap allocation, like the
// flash-resident device loop it mirrors. Enforced here by inspecting the
// marked region of the source, since the runtime gives no allocation hook.

const SOURCE = readFileSync(new URL("../src/predict.ts", import.meta.url), "utf8");

function stripComments(code: string): string {
  return code.replace(/\/\*[\s\S]*?\*\//g, "").replace(/\/\/[^\n]*/g, "");
}

function hotSection(): string {
  const begin = SOURCE.indexOf("/* alloc-free-begin */");
  const end = SOURCE.indexOf("/* alloc-free-end */");
  expect(begin).toBeGreaterThan(-1);
  expect(end).toBeGreaterThan(begin);
  return stripComments(SOURCE.slice(begin, end));
}

describe("hot path source", () => {
  it("covers both score and predict", () => {
    const section = hotSection();
    expect(section).toContain("score(");
    expect(section).toContain("predict(");
  });

  it("contains no allocating constructs", () => {
    const section = hotSection();
    for (const banned of [
      /\bnew\b/,
      /\bArray\b/,
      /\[\s*\]/,
      /\.\.\./,
      /=>/,
      /\b(push|map|filter|slice|concat|splice|from|of)\s*\(/,
      /\basync\b/,
      /\bawait\b/,
      /`/,
      /\byield\b/,
    ]) {
      expect(section).not.toMatch(banned);
    }
  });

  it("allocates typed arrays nowhere in the predictor module", () => {
    expect(SOURCE).not.toMatch(/new\s+(Float32Array|Float64Array|Uint8Array|Array)/);
  });
});
