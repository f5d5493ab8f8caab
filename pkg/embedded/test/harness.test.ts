import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { fileURLToPath } from "node:url";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

const HARNESS = fileURLToPath(new URL("../dist/harness.js", import.meta.url));

function fixture(rel: string): string {
  return fileURLToPath(new URL(`../fixtures/${rel}`, import.meta.url));
}

function run(args: string[]) {
  return spawnSync(process.execPath, [HARNESS, ...args], { encoding: "utf8" });
}

describe("harness exit codes", () => {
  it("exits 0 with zero mismatches on both fixtures", () => {
    for (const name of ["binary", "tenclass"]) {
      const res = run([fixture(`${name}/sefr_model_data.h`), fixture(`${name}/sefr_golden.txt`)]);
      expect(res.status).toBe(0);
      expect(res.stdout).toContain("512 records, 0 mismatches");
    }
  });

  it("exits 1 when a golden label disagrees", () => {
    const text = readFileSync(fixture("binary/sefr_golden.txt"), "utf8");
    const lines = text.trimEnd().split("\n");
    const first = lines[1] as string;
    const fields = first.split(" ");
    const flipped = fields[fields.length - 1] === "0" ? "1" : "0";
    lines[1] = [...fields.slice(0, -1), flipped].join(" ");
    const dir = mkdtempSync(join(tmpdir(), "golden-"));
    const tampered = join(dir, "tampered.txt");
    writeFileSync(tampered, lines.join("\n") + "\n");

    const res = run([fixture("binary/sefr_model_data.h"), tampered]);
    expect(res.status).toBe(1);
    expect(res.stdout).toContain("1 mismatches");
  });

  it("exits 2 on usage errors and unreadable inputs", () => {
    expect(run([]).status).toBe(2);
    expect(run([fixture("binary/sefr_model_data.h")]).status).toBe(2);
    const res = run([fixture("binary/sefr_model_data.h"), "/nonexistent/golden.txt"]);
    expect(res.status).toBe(2);
  });

  it("exits 2 when model and golden shapes disagree", () => {
    const res = run([fixture("binary/sefr_model_data.h"), fixture("tenclass/sefr_golden.txt")]);
    expect(res.status).toBe(2);
    expect(res.stdout).toContain("feature count mismatch");
  });
});
