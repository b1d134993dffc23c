/**
 * Per-figure series layout: which quantities are plotted, how panels are
 * split, and the extraction of (cond, value) point lists from rows.
 *
 * Everything is plotted against the condition number on log-log axes, so
 * points with a missing, zero, negative or infinite coordinate cannot be
 * placed; they are dropped and counted, and the renderer reports the drops
 * on stderr rather than clipping silently.
 */

import { ExperimentRow, SchemaError } from "./rows.js";

export type FigureId = "fig1" | "fig2" | "fig3";

export const FIGURE_IDS: FigureId[] = ["fig1", "fig2", "fig3"];

export type LineStyle = "solid" | "dashed" | "dotted";

interface QuantitySpec {
  key: "errDc" | "errVs" | "boundDc" | "boundVs" | "boundImproved" | "boundNaive";
  label: string;
  style: LineStyle;
  color: string;
}

const Q: Record<QuantitySpec["key"], QuantitySpec> = {
  errDc: { key: "errDc", label: "err_dc", style: "solid", color: "#1f77b4" },
  errVs: { key: "errVs", label: "err_vs", style: "solid", color: "#d62728" },
  boundDc: { key: "boundDc", label: "bound_dc", style: "dashed", color: "#7f7f7f" },
  boundVs: { key: "boundVs", label: "bound_vs", style: "dashed", color: "#ff7f0e" },
  boundImproved: { key: "boundImproved", label: "bound_improved", style: "dotted", color: "#2ca02c" },
  boundNaive: { key: "boundNaive", label: "bound_naive", style: "dotted", color: "#9467bd" },
};

interface FigureSpec {
  /** one panel per polynomial (fig3) or all polynomials in one panel */
  panelPerPoly: boolean;
  quantities: QuantitySpec[];
  title: string;
}

const FIGURES: Record<FigureId, FigureSpec> = {
  fig1: {
    panelPerPoly: false,
    quantities: [Q.errDc, Q.boundDc, Q.boundImproved],
    title: "relative forward error vs a priori bound",
  },
  fig2: {
    panelPerPoly: false,
    quantities: [Q.errDc, Q.boundImproved, Q.boundNaive],
    title: "naive vs improved relative error bound",
  },
  fig3: {
    panelPerPoly: true,
    quantities: [Q.errDc, Q.errVs, Q.boundDc, Q.boundVs, Q.boundImproved],
    title: "de Casteljau vs VS",
  },
};

// distinguishes polynomials when several share a panel (fig1)
const POLY_COLORS = ["#1f77b4", "#2ca02c", "#d62728", "#ff7f0e", "#9467bd", "#8c564b"];

export interface SeriesPoint {
  x: number;
  y: number;
}

export interface Series {
  panel: string;
  name: string; // "<poly>:<quantity>"
  label: string;
  style: LineStyle;
  color: string;
  points: SeriesPoint[];
  dropped: number;
}

export interface FigureData {
  figure: FigureId;
  title: string;
  panels: string[];
  series: Series[];
}

function plottable(value: number | null): value is number {
  return value !== null && Number.isFinite(value) && value > 0;
}

export function extractSeries(figure: FigureId, rows: ExperimentRow[]): FigureData {
  const spec = FIGURES[figure];
  for (const row of rows) {
    if (row.experiment !== figure) {
      throw new SchemaError(
        `row with experiment "${row.experiment}" in a ${figure} plot (poly ${row.poly}, index ${row.eOrJ})`,
      );
    }
  }

  const polys: string[] = [];
  for (const row of rows) {
    if (!polys.includes(row.poly)) polys.push(row.poly);
  }

  const series: Series[] = [];
  polys.forEach((poly, polyIndex) => {
    const panel = spec.panelPerPoly ? poly : "";
    const polyRows = rows.filter((r) => r.poly === poly);
    const manyPolysPerPanel = !spec.panelPerPoly && polys.length > 1;
    for (const quantity of spec.quantities) {
      const points: SeriesPoint[] = [];
      let dropped = 0;
      let present = 0;
      for (const row of polyRows) {
        const y = row[quantity.key];
        if (y === null) continue; // the quantity is absent for this polynomial
        present += 1;
        if (!plottable(row.cond) || !plottable(y)) {
          dropped += 1;
          continue;
        }
        points.push({ x: row.cond, y });
      }
      if (present === 0) continue; // column empty for this polynomial: no series
      points.sort((a, b) => a.x - b.x);
      series.push({
        panel,
        name: `${poly}:${quantity.label}`,
        label: manyPolysPerPanel ? `${poly} ${quantity.label}` : quantity.label,
        style: quantity.style,
        color: manyPolysPerPanel ? POLY_COLORS[polyIndex % POLY_COLORS.length] : quantity.color,
        points,
        dropped,
      });
    }
  });

  const panels = spec.panelPerPoly ? polys : [""];
  return { figure, title: spec.title, panels, series };
}
