#!/usr/bin/env node
/** render_figures <run-dir> [--only figID] [--out DIR]
 *
 * Reads experiment CSVs from a run directory and writes one SVG and one
 * PNG per figure into <run-dir>/figures (or --out).  Exit codes: 0 on
 * success, 1 on a named rendering error (missing file/column, empty or
 * malformed CSV, unknown figure id), 2 on a usage error.
 */

import { statSync } from "node:fs";

import { RenderError, UsageError } from "./errors.js";
import { figureIds } from "./figures.js";
import { renderRun } from "./render.js";

const USAGE =
  "usage: render_figures <run-dir> [--only figID[,figID...]] [--out DIR]\n" +
  `figures: ${figureIds().join(", ")}`;

interface Args {
  runDir: string;
  only: string[];
  outDir?: string;
}

export function parseArgs(argv: string[]): Args | "help" {
  let runDir: string | undefined;
  const only: string[] = [];
  let outDir: string | undefined;
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i]!;
    if (arg === "-h" || arg === "--help") return "help";
    if (arg === "--only") {
      const value = argv[++i];
      if (!value) throw new UsageError("--only needs a figure id");
      only.push(...value.split(",").map((s) => s.trim()).filter(Boolean));
    } else if (arg === "--out") {
      const value = argv[++i];
      if (!value) throw new UsageError("--out needs a directory");
      outDir = value;
    } else if (arg.startsWith("-")) {
      throw new UsageError(`unknown flag ${arg}`);
    } else if (runDir === undefined) {
      runDir = arg;
    } else {
      throw new UsageError(`unexpected argument ${arg}`);
    }
  }
  if (!runDir) throw new UsageError("missing run directory");
  return { runDir, only, ...(outDir !== undefined ? { outDir } : {}) };
}

export function main(argv: string[]): number {
  let args: Args | "help";
  try {
    args = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      process.stderr.write(`${err.name}: ${err.message}\n${USAGE}\n`);
      return 2;
    }
    throw err;
  }
  if (args === "help") {
    process.stdout.write(USAGE + "\n");
    return 0;
  }
  try {
    const st = statSync(args.runDir, { throwIfNoEntry: false });
    if (!st || !st.isDirectory()) {
      process.stderr.write(`UsageError: run directory not found: ${args.runDir}\n`);
      return 2;
    }
    const results = renderRun(args.runDir, {
      only: args.only,
      ...(args.outDir !== undefined ? { outDir: args.outDir } : {}),
    });
    for (const r of results) {
      process.stdout.write(`${r.id}: wrote ${r.svgPath} and ${r.pngPath}\n`);
    }
    return 0;
  } catch (err) {
    if (err instanceof RenderError) {
      process.stderr.write(`${err.name}: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
}

const entry = process.argv[1];
if (entry && (entry.endsWith("cli.js") || entry.endsWith("render_figures"))) {
  process.exit(main(process.argv.slice(2)));
}
