/**
 * End-to-end rendering: experiment CSV in, SVG or PNG figure out.
 *
 * Rendering is a pure function of the CSV contents; nothing numeric is
 * recomputed here. Values that cannot be placed on log axes (zero,
 * negative, infinite) are dropped with a note on stderr.
 */

import { Resvg } from "@resvg/resvg-js";
import * as fs from "node:fs";

import { FIGURE_IDS, FigureId, extractSeries } from "./figures.js";
import { SchemaError, parseExperimentCsv } from "./rows.js";
import { renderSvg } from "./svg.js";

export interface PlotSpec {
  input: string;
  figure: FigureId;
  output: string;
}

export function isFigureId(value: string): value is FigureId {
  return (FIGURE_IDS as string[]).includes(value);
}

export function render(spec: PlotSpec): void {
  const text = fs.readFileSync(spec.input, "utf8");
  const rows = parseExperimentCsv(text);
  const data = extractSeries(spec.figure, rows);

  for (const s of data.series) {
    if (s.dropped > 0) {
      process.stderr.write(
        `note: ${spec.figure} series ${s.name}: dropped ${s.dropped} point(s) ` +
          `not representable on log axes\n`,
      );
    }
  }

  const svg = renderSvg(data);
  if (spec.output.endsWith(".svg")) {
    fs.writeFileSync(spec.output, svg, "utf8");
  } else if (spec.output.endsWith(".png")) {
    const png = new Resvg(svg, { fitTo: { mode: "original" } }).render().asPng();
    fs.writeFileSync(spec.output, png);
  } else {
    throw new SchemaError(`unsupported output extension (use .svg or .png): ${spec.output}`);
  }
}
