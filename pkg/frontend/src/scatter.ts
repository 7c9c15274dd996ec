/**
 * SVG scatter plot of the Pareto front in one 2-criteria plane.
 *
 * Coordinates are the members' min-max scaled values, so both axes span
 * [0, 1] regardless of the criteria's raw units. The plot never decides
 * what is selected; it only highlights the id it is given.
 */

import type { ParetoPayload } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface ScatterOptions {
  width?: number;
  height?: number;
  margin?: number;
}

interface Geometry {
  width: number;
  height: number;
  margin: number;
}

const toX = (value: number, g: Geometry): number =>
  g.margin + value * (g.width - 2 * g.margin);

const toY = (value: number, g: Geometry): number =>
  g.height - g.margin - value * (g.height - 2 * g.margin);

function svgElement<K extends keyof SVGElementTagNameMap>(
  doc: Document,
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = doc.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) {
    el.setAttribute(name, value);
  }
  return el;
}

function axisLabel(
  doc: Document,
  text: string,
  attrs: Record<string, string>,
): SVGTextElement {
  const label = svgElement(doc, "text", { class: "axis-label", ...attrs });
  label.textContent = text;
  return label;
}

/**
 * Render the front as an SVG element.
 *
 * `selectedId` of null (no selection yet) highlights nothing. Every point
 * carries its combination id in `data-id` and a tooltip with its
 * hyperparameters.
 */
export function renderScatter(
  doc: Document,
  pareto: ParetoPayload,
  pair: [number, number],
  selectedId: string | null,
  options: ScatterOptions = {},
): SVGSVGElement {
  const g: Geometry = {
    width: options.width ?? 420,
    height: options.height ?? 420,
    margin: options.margin ?? 48,
  };
  const [xIndex, yIndex] = pair;

  const svg = svgElement(doc, "svg", {
    class: "scatter",
    viewBox: `0 0 ${g.width} ${g.height}`,
    width: String(g.width),
    height: String(g.height),
    role: "img",
  });

  const x0 = toX(0, g);
  const x1 = toX(1, g);
  const y0 = toY(0, g);
  const y1 = toY(1, g);
  svg.append(
    svgElement(doc, "line", {
      class: "axis", x1: String(x0), y1: String(y0), x2: String(x1), y2: String(y0),
    }),
    svgElement(doc, "line", {
      class: "axis", x1: String(x0), y1: String(y0), x2: String(x0), y2: String(y1),
    }),
    axisLabel(doc, pareto.criteria_names[xIndex] ?? `criterion ${xIndex}`, {
      class: "axis-label axis-label-x",
      x: String((x0 + x1) / 2),
      y: String(g.height - 8),
      "text-anchor": "middle",
    }),
    axisLabel(doc, pareto.criteria_names[yIndex] ?? `criterion ${yIndex}`, {
      class: "axis-label axis-label-y",
      x: "14",
      y: String((y0 + y1) / 2),
      "text-anchor": "middle",
      transform: `rotate(-90 14 ${(y0 + y1) / 2})`,
    }),
    axisLabel(doc, "0", { x: String(x0 - 10), y: String(y0 + 14) }),
    axisLabel(doc, "1", { x: String(x1), y: String(y0 + 14) }),
    axisLabel(doc, "1", { x: String(x0 - 14), y: String(y1 + 4) }),
  );

  for (const member of pareto.members) {
    const selected = member.combination_id === selectedId;
    const point = svgElement(doc, "circle", {
      class: selected ? "point selected" : "point",
      cx: String(toX(member.scaled[xIndex] ?? 0, g)),
      cy: String(toY(member.scaled[yIndex] ?? 0, g)),
      r: selected ? "8" : "5",
    });
    point.dataset.id = member.combination_id;
    const hp = Object.entries(member.hyperparameters)
      .map(([name, value]) => `${name}=${value}`)
      .join(", ");
    const tooltip = svgElement(doc, "title", {});
    tooltip.textContent = hp ? `${member.combination_id} (${hp})` : member.combination_id;
    point.append(tooltip);
    svg.append(point);
  }
  return svg;
}
