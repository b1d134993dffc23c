/**
 * Log-log SVG assembly. The output is deliberately structured: every data
 * series is one <polyline class="series"> carrying data-series and
 * data-panel attributes, so tests (and downstream tooling) can read the
 * rendered geometry back instead of trusting the renderer.
 */

import { scaleLog } from "d3-scale";

import { FigureData, LineStyle, Series } from "./figures.js";

const PANEL_WIDTH = 460;
const PANEL_HEIGHT = 430;
const PANEL_GAP = 40;
const MARGIN = { top: 64, right: 26, bottom: 64, left: 88 };

const DASH: Record<LineStyle, string> = {
  solid: "",
  dashed: "7 5",
  dotted: "2 4",
};

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

interface Extent {
  min: number;
  max: number;
}

function extent(values: number[], fallback: Extent): Extent {
  if (values.length === 0) return fallback;
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (min === max) return { min: min / 10, max: max * 10 };
  return { min, max };
}

/** At most `count` decade ticks across the domain, evenly thinned. */
function decadeTicks(min: number, max: number, count: number): number[] {
  const lo = Math.ceil(Math.log10(min) - 1e-9);
  const hi = Math.floor(Math.log10(max) + 1e-9);
  if (hi < lo) return [];
  const step = Math.max(1, Math.ceil((hi - lo + 1) / count));
  const ticks: number[] = [];
  for (let d = lo; d <= hi; d += step) ticks.push(Math.pow(10, d));
  return ticks;
}

function tickLabel(value: number): string {
  const exp = Math.round(Math.log10(value));
  if (exp === 0) return "1";
  return `1e${exp > 0 ? "+" : ""}${exp}`;
}

function panelSeries(data: FigureData, panel: string): Series[] {
  return data.series.filter((s) => s.panel === panel);
}

function renderPanel(
  data: FigureData,
  panel: string,
  originX: number,
  originY: number,
  out: string[],
): void {
  const series = panelSeries(data, panel);
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  const xDomain = extent(xs, { min: 1, max: 1e12 });
  const yDomain = extent(ys, { min: 1e-18, max: 1e2 });

  const x = scaleLog()
    .domain([xDomain.min, xDomain.max])
    .range([originX, originX + PANEL_WIDTH])
    .nice();
  const y = scaleLog()
    .domain([yDomain.min, yDomain.max])
    .range([originY + PANEL_HEIGHT, originY])
    .nice();

  if (panel !== "") {
    out.push(
      `<text x="${originX + PANEL_WIDTH / 2}" y="${originY - 12}" text-anchor="middle" ` +
        `font-size="15" font-weight="bold">${escapeXml(panel)}</text>`,
    );
  }

  // frame and decade grid
  out.push(
    `<rect class="frame" x="${originX}" y="${originY}" width="${PANEL_WIDTH}" ` +
      `height="${PANEL_HEIGHT}" fill="none" stroke="#333" stroke-width="1"/>`,
  );
  const [xMin, xMax] = x.domain();
  const [yMax2, yMin2] = [y.domain()[1], y.domain()[0]];
  for (const t of decadeTicks(xMin, xMax, 7)) {
    const px = x(t);
    out.push(
      `<line x1="${px.toFixed(2)}" y1="${originY}" x2="${px.toFixed(2)}" ` +
        `y2="${originY + PANEL_HEIGHT}" stroke="#ddd" stroke-width="0.6"/>`,
      `<text x="${px.toFixed(2)}" y="${originY + PANEL_HEIGHT + 18}" text-anchor="middle" ` +
        `font-size="11">${tickLabel(t)}</text>`,
    );
  }
  for (const t of decadeTicks(yMin2, yMax2, 7)) {
    const py = y(t);
    out.push(
      `<line x1="${originX}" y1="${py.toFixed(2)}" x2="${originX + PANEL_WIDTH}" ` +
        `y2="${py.toFixed(2)}" stroke="#ddd" stroke-width="0.6"/>`,
      `<text x="${originX - 6}" y="${(py + 4).toFixed(2)}" text-anchor="end" ` +
        `font-size="11">${tickLabel(t)}</text>`,
    );
  }

  // axis labels
  out.push(
    `<text x="${originX + PANEL_WIDTH / 2}" y="${originY + PANEL_HEIGHT + 42}" ` +
      `text-anchor="middle" font-size="13">condition number</text>`,
    `<text transform="translate(${originX - 62} ${originY + PANEL_HEIGHT / 2}) rotate(-90)" ` +
      `text-anchor="middle" font-size="13">relative error</text>`,
  );

  // data series
  for (const s of series) {
    if (s.points.length === 0) continue;
    const points = s.points.map((p) => `${x(p.x).toFixed(2)},${y(p.y).toFixed(2)}`).join(" ");
    const dash = DASH[s.style] === "" ? "" : ` stroke-dasharray="${DASH[s.style]}"`;
    out.push(
      `<polyline class="series" data-series="${escapeXml(s.name)}" ` +
        `data-panel="${escapeXml(panel)}" points="${points}" fill="none" ` +
        `stroke="${s.color}" stroke-width="1.6"${dash}/>`,
    );
  }

  // legend, top-left inside the frame
  if (series.length > 0) {
    const lx = originX + 10;
    let ly = originY + 16;
    out.push(
      `<rect x="${lx - 4}" y="${ly - 11}" width="150" height="${series.length * 16 + 8}" ` +
        `fill="white" fill-opacity="0.85" stroke="#bbb" stroke-width="0.5"/>`,
    );
    for (const s of series) {
      const dash = DASH[s.style] === "" ? "" : ` stroke-dasharray="${DASH[s.style]}"`;
      out.push(
        `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 26}" y2="${ly - 4}" ` +
          `stroke="${s.color}" stroke-width="1.6"${dash}/>`,
        `<text x="${lx + 32}" y="${ly}" font-size="11">${escapeXml(s.label)}</text>`,
      );
      ly += 16;
    }
  }
}

export function renderSvg(data: FigureData): string {
  const panels = data.panels;
  const width = MARGIN.left + panels.length * PANEL_WIDTH + (panels.length - 1) * PANEL_GAP + MARGIN.right;
  const height = MARGIN.top + PANEL_HEIGHT + MARGIN.bottom;

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="DejaVu Sans, Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    `<text x="${width / 2}" y="26" text-anchor="middle" font-size="16" font-weight="bold">` +
      `${escapeXml(`${data.figure}: ${data.title}`)}</text>`,
  );
  panels.forEach((panel, i) => {
    const originX = MARGIN.left + i * (PANEL_WIDTH + PANEL_GAP);
    renderPanel(data, panel, originX, MARGIN.top, out);
  });
  out.push("</svg>");
  return out.join("\n");
}
