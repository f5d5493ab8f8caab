/**
 * Parser for exported model data headers.
 *
 * The input is the generated C file: three `#define` counts plus three
 * static arrays (class names, per-hyperplane float32 weights, float32
 * biases). Binary models carry one score row and two classes; otherwise
 * one row per class.
 */

export interface ExportedModel {
  readonly featureCount: number;
  readonly classCount: number;
  readonly scoreCount: number;
  readonly classes: readonly string[];
  /** Row-major, scoreCount x featureCount. */
  readonly weights: Float32Array;
  readonly biases: Float32Array;
}

function defineValue(text: string, name: string): number {
  const match = new RegExp(`#define\\s+${name}\\s+(\\d+)`).exec(text);
  if (match === null) {
    throw new Error(`model data is missing #define ${name}`);
  }
  return Number.parseInt(match[1] as string, 10);
}

function arrayBlock(text: string, name: string): string {
  const start = text.indexOf(name);
  if (start < 0) {
    throw new Error(`model data is missing the ${name} array`);
  }
  const open = text.indexOf("{", start);
  const close = text.indexOf("};", start);
  if (open < 0 || close < 0 || close < open) {
    throw new Error(`unterminated ${name} array`);
  }
  return text.slice(open + 1, close);
}

function unescapeC(s: string): string {
  return s.replace(/\\(["\\])/g, "$1");
}

function parseFloatLiteral(raw: string, context: string): number {
  // literals look like 0.123456789f or 1.00000001e-07f
  const value = Number.parseFloat(raw);
  if (!Number.isFinite(value)) {
    throw new Error(`${context}: bad float literal ${raw.trim()}`);
  }
  return value;
}

function splitNumbers(block: string, context: string): number[] {
  return block
    .split(",")
    .map((cell) => cell.trim())
    .filter((cell) => cell.length > 0)
    .map((cell) => parseFloatLiteral(cell, context));
}

export function parseModelData(text: string): ExportedModel {
  const featureCount = defineValue(text, "SEFR_FEATURE_COUNT");
  const classCount = defineValue(text, "SEFR_CLASS_COUNT");
  const scoreCount = defineValue(text, "SEFR_SCORE_COUNT");
  if (featureCount < 1 || classCount < 2 || scoreCount < 1) {
    throw new Error(
      `implausible counts: features ${featureCount}, classes ${classCount}, scores ${scoreCount}`,
    );
  }
  if (scoreCount === 1 ? classCount !== 2 : classCount !== scoreCount) {
    throw new Error(
      `class count ${classCount} does not fit score count ${scoreCount}`,
    );
  }

  const classes: string[] = [];
  const classBlock = arrayBlock(text, "sefr_classes");
  const stringRe = /"((?:[^"\\]|\\.)*)"/g;
  for (let m = stringRe.exec(classBlock); m !== null; m = stringRe.exec(classBlock)) {
    classes.push(unescapeC(m[1] as string));
  }
  if (classes.length !== classCount) {
    throw new Error(`expected ${classCount} class names, found ${classes.length}`);
  }

  const weights = new Float32Array(scoreCount * featureCount);
  const weightBlock = arrayBlock(text, "sefr_weights");
  const rowRe = /\{([^{}]*)\}/g;
  let row = 0;
  for (let m = rowRe.exec(weightBlock); m !== null; m = rowRe.exec(weightBlock)) {
    if (row >= scoreCount) {
      throw new Error(`more than ${scoreCount} weight rows`);
    }
    const values = splitNumbers(m[1] as string, `weight row ${row}`);
    if (values.length !== featureCount) {
      throw new Error(
        `weight row ${row} has ${values.length} values, expected ${featureCount}`,
      );
    }
    weights.set(values, row * featureCount);
    row += 1;
  }
  if (row !== scoreCount) {
    throw new Error(`expected ${scoreCount} weight rows, found ${row}`);
  }

  const biasValues = splitNumbers(arrayBlock(text, "sefr_biases"), "biases");
  if (biasValues.length !== scoreCount) {
    throw new Error(`expected ${scoreCount} biases, found ${biasValues.length}`);
  }

  return {
    featureCount,
    classCount,
    scoreCount,
    classes,
    weights,
    biases: Float32Array.from(biasValues),
  };
}
