import {
  cpSync,
  mkdtempSync,
  readFileSync,
  readdirSync,
  renameSync,
  writeFileSync,
} from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import {
  EmptyCsvError,
  MissingColumnError,
  MissingFileError,
  UnknownFigureError,
} from "../src/errors.js";
import { composeFigure, figureIds, figureInputs, FIGURES } from "../src/figures.js";
import { layout } from "../src/draw.js";
import { renderRun } from "../src/render.js";

const FIXTURE_RUN = fileURLToPath(new URL("./fixtures/default-run", import.meta.url));
const PNG_MAGIC = Buffer.from([0x89, 0x50, 0x4e, 0x47]);

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "figtest-"));
}

function brokenRunDir(mutate: (dir: string) => void): string {
  const dir = join(tmp(), "run");
  cpSync(FIXTURE_RUN, dir, { recursive: true });
  mutate(dir);
  return dir;
}

describe("figure catalog", () => {
  it("has unique ids and resolvable inputs", () => {
    const ids = figureIds();
    expect(new Set(ids).size).toBe(ids.length);
    expect(ids).toContain("fig6");
    expect(ids).toContain("fig10");
    for (const spec of FIGURES) {
      expect(figureInputs(spec).length).toBeGreaterThan(0);
    }
  });

  it("composes every figure from a complete run", () => {
    for (const spec of FIGURES) {
      const model = composeFigure(spec, FIXTURE_RUN);
      const ops = layout(model);
      expect(ops.length).toBeGreaterThan(10);
      if (spec.kind === "lines") {
        expect(model.series.length).toBe(spec.series.length);
        const n = model.series[0]!.xs.length;
        for (const s of model.series) {
          expect(s.ys.length).toBe(n);
        }
      } else {
        expect(model.regions.length).toBe(spec.frontiers.length);
        expect(model.points.length).toBeGreaterThanOrEqual(2);
      }
    }
  });
});

describe("renderRun", () => {
  it("writes one SVG and one PNG per figure spec", () => {
    const out = tmp();
    const results = renderRun(FIXTURE_RUN, { outDir: out });
    expect(results.map((r) => r.id)).toEqual(figureIds());
    const files = readdirSync(out).sort();
    expect(files).toHaveLength(2 * FIGURES.length);
    for (const r of results) {
      const png = readFileSync(r.pngPath);
      expect(png.subarray(0, 4).equals(PNG_MAGIC)).toBe(true);
      expect(png.length).toBeGreaterThan(1000);
      const svg = readFileSync(r.svgPath, "utf-8");
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg).toContain("</svg>");
      expect(svg).toContain("<polyline");
    }
  });

  it("defaults the output directory to <run-dir>/figures", () => {
    const dir = brokenRunDir(() => {});
    const results = renderRun(dir, { only: ["fig2"] });
    expect(results[0]!.svgPath).toBe(join(dir, "figures", "fig2.svg"));
    expect(readFileSync(results[0]!.svgPath, "utf-8")).toContain("correlation");
  });

  it("is byte-deterministic across reruns", () => {
    const outA = tmp();
    const outB = tmp();
    renderRun(FIXTURE_RUN, { outDir: outA });
    renderRun(FIXTURE_RUN, { outDir: outB });
    const names = readdirSync(outA).sort();
    expect(names).toEqual(readdirSync(outB).sort());
    for (const name of names) {
      const a = readFileSync(join(outA, name));
      const b = readFileSync(join(outB, name));
      expect(a.equals(b), `${name} differs between reruns`).toBe(true);
    }
  });

  it("renders only the requested subset with --only semantics", () => {
    const out = tmp();
    const results = renderRun(FIXTURE_RUN, { only: ["fig5a", "fig10"], outDir: out });
    expect(results.map((r) => r.id)).toEqual(["fig5a", "fig10"]);
    expect(readdirSync(out).sort()).toEqual(
      ["fig10.png", "fig10.svg", "fig5a.png", "fig5a.svg"],
    );
  });

  it("rejects unknown figure ids by name", () => {
    expect(() => renderRun(FIXTURE_RUN, { only: ["fig99"] })).toThrow(UnknownFigureError);
  });

  it("fails with a named error when a CSV column is absent", () => {
    const dir = brokenRunDir((d) => {
      const path = join(d, "dl_snr.csv");
      const text = readFileSync(path, "utf-8").replace("CR_fdsac", "CR_renamed");
      writeFileSync(path, text, "utf-8");
    });
    let caught: unknown;
    try {
      renderRun(dir, { only: ["fig3a"] });
    } catch (err) {
      caught = err;
    }
    expect(caught).toBeInstanceOf(MissingColumnError);
    const mce = caught as MissingColumnError;
    expect(mce.column).toBe("CR_fdsac");
    expect(mce.message).toContain("dl_snr.csv");
  });

  it("fails with a named error when an input CSV is missing or empty", () => {
    const missing = brokenRunDir((d) =>
      renameSync(join(d, "ccf.csv"), join(d, "ccf.bak")),
    );
    expect(() => renderRun(missing, { only: ["fig2"] })).toThrow(MissingFileError);

    const empty = brokenRunDir((d) => writeFileSync(join(d, "ccf.csv"), "", "utf-8"));
    expect(() => renderRun(empty, { only: ["fig2"] })).toThrow(EmptyCsvError);
  });

  it("region figures shade a polygon per frontier", () => {
    const out = tmp();
    renderRun(FIXTURE_RUN, { only: ["fig10"], outDir: out });
    const svg = readFileSync(join(out, "fig10.svg"), "utf-8");
    const polygons = svg.match(/<polygon /g) ?? [];
    // three frontier fills plus one legend swatch per region entry
    expect(polygons.length).toBeGreaterThanOrEqual(6);
    expect(svg).toContain("FDSAC");
    expect(svg).toContain("inner bound");
  });
});
