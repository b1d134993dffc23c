import { execFileSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { beforeAll, describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { COLUMNS } from "../src/rows.js";

const here = path.dirname(fileURLToPath(import.meta.url));
const repoRoot = path.resolve(here, "../..");

let workDir: string;
const csvPath: Record<string, string> = {};

beforeAll(() => {
  workDir = fs.mkdtempSync(path.join(os.tmpdir(), "bernfloat-plots-"));
  // the experiment CSVs come from the python package's CLI, the only
  // interface this frontend consumes
  for (const figure of ["fig1", "fig2", "fig3"]) {
    const out = path.join(workDir, `${figure}.csv`);
    execFileSync("python3", ["-m", "bernfloat.cli", figure, "--out", out], {
      cwd: repoRoot,
      stdio: "pipe",
    });
    csvPath[figure] = out;
  }
}, 120_000);

function renderToString(figure: string, input: string): string {
  const out = path.join(workDir, `${figure}-${Math.random().toString(36).slice(2)}.svg`);
  const code = main(["--input", input, "--figure", figure, "--out", out]);
  expect(code).toBe(0);
  return fs.readFileSync(out, "utf8");
}

function seriesNames(svg: string): string[] {
  return [...svg.matchAll(/<polyline class="series" data-series="([^"]+)"/g)].map((m) => m[1]);
}

function seriesPoints(svg: string, name: string): Array<[number, number]> {
  const match = svg.match(
    new RegExp(`<polyline class="series" data-series="${name}"[^>]*points="([^"]*)"`),
  );
  expect(match, `series ${name} present`).toBeTruthy();
  return match![1].split(" ").map((pair) => {
    const [x, y] = pair.split(",").map(Number);
    return [x, y];
  });
}

describe("figure rendering", () => {
  it("renders fig1 with seven series (improved bound only for the family member)", () => {
    const svg = renderToString("fig1", csvPath.fig1);
    expect(svg.startsWith("<svg")).toBe(true);
    const names = seriesNames(svg).sort();
    expect(names).toEqual([
      "u:bound_dc", "u:err_dc",
      "v:bound_dc", "v:bound_improved", "v:err_dc",
      "w:bound_dc", "w:err_dc",
    ]);
  });

  it("renders fig2 with exactly the error, improved and naive series", () => {
    const svg = renderToString("fig2", csvPath.fig2);
    expect(seriesNames(svg).sort()).toEqual(["v:bound_improved", "v:bound_naive", "v:err_dc"]);
  });

  it("renders fig3 as three panels with two error series plus bounds each", () => {
    const svg = renderToString("fig3", csvPath.fig3);
    const names = seriesNames(svg);
    expect(names).toHaveLength(13); // 4 for f, 4 for g, 5 for h
    const panels = new Set(
      [...svg.matchAll(/<polyline class="series"[^>]*data-panel="([^"]+)"/g)].map((m) => m[1]),
    );
    expect([...panels].sort()).toEqual(["f", "g", "h"]);
    for (const poly of ["f", "g", "h"]) {
      expect(names).toContain(`${poly}:err_dc`);
      expect(names).toContain(`${poly}:err_vs`);
      expect(names).toContain(`${poly}:bound_dc`);
      expect(names).toContain(`${poly}:bound_vs`);
    }
    expect(names).toContain("h:bound_improved");
  });

  it("draws the improved bound below the naive bound at every plotted point", () => {
    const svg = renderToString("fig2", csvPath.fig2);
    const improved = seriesPoints(svg, "v:bound_improved");
    const naive = seriesPoints(svg, "v:bound_naive");
    expect(improved).toHaveLength(45);
    expect(naive).toHaveLength(45);
    for (let i = 0; i < improved.length; i++) {
      expect(improved[i][0]).toBeCloseTo(naive[i][0], 5); // same condition number
      // SVG y grows downward: smaller value = larger y coordinate
      expect(improved[i][1]).toBeGreaterThan(naive[i][1]);
    }
  });

  it("rasterizes to PNG when asked for a .png", () => {
    const out = path.join(workDir, "fig2.png");
    const code = main(["--input", csvPath.fig2, "--figure", "fig2", "--out", out]);
    expect(code).toBe(0);
    const bytes = fs.readFileSync(out);
    expect([...bytes.subarray(0, 4)]).toEqual([0x89, 0x50, 0x4e, 0x47]);
    expect(bytes.length).toBeGreaterThan(1000);
  });

  it("renders a header-only CSV to empty axes without crashing", () => {
    const empty = path.join(workDir, "empty.csv");
    fs.writeFileSync(empty, COLUMNS.join(",") + "\n", "utf8");
    const svg = renderToString("fig2", empty);
    expect(seriesNames(svg)).toHaveLength(0);
    expect(svg).toContain('class="frame"');
  });
});

describe("failure modes", () => {
  it("reports a missing column by name", () => {
    const bad = path.join(workDir, "bad.csv");
    fs.writeFileSync(bad, "experiment,poly\nfig2,v\n", "utf8");
    const out = path.join(workDir, "bad.svg");
    const code = main(["--input", bad, "--figure", "fig2", "--out", out]);
    expect(code).toBe(1);
  });

  it("rejects a figure id that does not match the CSV", () => {
    const out = path.join(workDir, "mismatch.svg");
    const code = main(["--input", csvPath.fig1, "--figure", "fig2", "--out", out]);
    expect(code).toBe(1);
  });

  it("rejects unknown figure ids as usage errors", () => {
    const code = main(["--input", csvPath.fig1, "--figure", "fig9", "--out", "x.svg"]);
    expect(code).toBe(2);
  });

  it("requires all three options", () => {
    expect(main(["--input", "x.csv"])).toBe(2);
  });

  it("rejects unsupported output extensions", () => {
    const code = main(["--input", csvPath.fig2, "--figure", "fig2", "--out",
                       path.join(workDir, "fig2.pdf")]);
    expect(code).toBe(1);
  });
});
