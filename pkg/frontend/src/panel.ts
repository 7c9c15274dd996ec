/**
 * Side panel: the current selection and why it won.
 *
 * Shows the selected combination's hyperparameters, the resolved weight
 * vector (including the server's midpoint substitution when every slider
 * is at zero), notes for zero-weight criteria, and every front member's
 * projection score with the winner marked.
 */

import type { SelectPayload } from "./api.js";
import { midpointSubstituted, zeroComponents } from "./state.js";

const NO_SELECTION_HINT = "Move a slider to request a selection.";

function element(
  doc: Document,
  tag: string,
  className: string,
  text?: string,
): HTMLElement {
  const el = doc.createElement(tag);
  el.className = className;
  if (text !== undefined) {
    el.textContent = text;
  }
  return el;
}

const formatWeights = (values: number[]): string =>
  `(${values.map(v => String(v)).join(", ")})`;

/**
 * Render the panel contents for the given response (null until the first
 * selection arrives). `sentPhi` is the weight vector the response answers,
 * needed to recognize the all-zero substitution.
 */
export function renderPanel(
  doc: Document,
  response: SelectPayload | null,
  sentPhi: number[],
  criteriaNames: string[],
): HTMLElement {
  const panel = element(doc, "div", "panel-content");
  if (response === null) {
    panel.append(element(doc, "p", "panel-hint", NO_SELECTION_HINT));
    return panel;
  }

  panel.append(element(doc, "h2", "selected-id", response.selected_id));

  const hp = Object.entries(response.hyperparameters);
  if (hp.length > 0) {
    const list = element(doc, "dl", "hyperparameters");
    for (const [name, value] of hp) {
      list.append(element(doc, "dt", "hp-name", name));
      list.append(element(doc, "dd", "hp-value", value));
    }
    panel.append(list);
  }

  panel.append(
    element(doc, "p", "resolved-phi", `resolved phi ${formatWeights(response.resolved_phi)}`),
  );
  if (midpointSubstituted(sentPhi, response.resolved_phi)) {
    panel.append(
      element(
        doc,
        "p",
        "note substitution-note",
        `All sliders are at zero, which expresses no preference; the server substituted the midpoint vector ${formatWeights(response.resolved_phi)}.`,
      ),
    );
  }
  const zeroed = zeroComponents(sentPhi);
  if (zeroed.length > 0 && !midpointSubstituted(sentPhi, response.resolved_phi)) {
    const names = zeroed.map(i => criteriaNames[i] ?? `criterion ${i}`).join(", ");
    panel.append(
      element(
        doc,
        "p",
        "note zero-weight-note",
        `Zero-weight criteria contribute nothing to the projection: ${names}.`,
      ),
    );
  }

  const table = element(doc, "table", "projections");
  const head = element(doc, "tr", "projections-head");
  head.append(element(doc, "th", "", "front member"), element(doc, "th", "", "score"));
  table.append(head);
  for (const entry of response.projections) {
    const row = element(
      doc,
      "tr",
      entry.combination_id === response.selected_id ? "projection selected" : "projection",
    );
    row.append(
      element(doc, "td", "projection-id", entry.combination_id),
      element(doc, "td", "projection-score", entry.score.toFixed(6)),
    );
    table.append(row);
  }
  panel.append(table);
  return panel;
}
