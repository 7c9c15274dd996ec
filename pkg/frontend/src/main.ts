/**
 * Explorer wiring: sliders in, scatter and panel out.
 *
 * The app fetches the Pareto front once, then answers every slider change
 * with a debounced POST /api/select. The server is the single source of
 * truth for selection: the highlighted point is always the id from the
 * most recent successful response, never a client-side computation.
 */

import { ApiClient, type ParetoPayload, type SelectPayload } from "./api.js";
import { renderPanel } from "./panel.js";
import { renderScatter } from "./scatter.js";
import { SelectionGate } from "./scheduler.js";
import {
  clampWeight,
  criteriaPairs,
  initialState,
  withCriteriaPair,
  withResponse,
  withWeight,
  type ExplorerState,
} from "./state.js";

export interface ExplorerOptions {
  /** Service origin, e.g. "http://127.0.0.1:8000"; same-origin when empty. */
  baseUrl?: string;
  /** Debounce for slider-driven selection requests. */
  debounceMs?: number;
  /** Called after a selection response has been applied to the view. */
  onSelectionApplied?: (payload: SelectPayload) => void;
  /** Called whenever an error surfaces in the banner or inline message. */
  onErrorShown?: (message: string) => void;
}

const SLIDER_STEP = "0.01";

export class ExplorerApp {
  private readonly api: ApiClient;
  private readonly gate: SelectionGate;
  private readonly options: ExplorerOptions;

  private pareto: ParetoPayload | null = null;
  private state: ExplorerState;
  private appliedPhi: number[] = [];

  constructor(private readonly root: HTMLElement, options: ExplorerOptions = {}) {
    this.options = options;
    this.api = new ApiClient(options.baseUrl ?? "");
    this.gate = new SelectionGate(options.debounceMs ?? 100, phi => this.submit(phi));
    this.state = initialState(2);
  }

  /** The current state; exposed for tests, not mutated by callers. */
  currentState(): ExplorerState {
    return this.state;
  }

  /** Fetch the front, build the controls, and request the initial selection. */
  async init(): Promise<void> {
    this.buildShell();
    const result = await this.api.pareto();
    if (result.kind !== "ok") {
      this.showBanner(`Cannot load the Pareto front: ${result.message}`);
      return;
    }
    this.pareto = result.payload;
    this.state = initialState(this.pareto.criteria_names.length);
    this.buildControls();
    this.renderView();
    this.gate.schedule(this.state.phi);
  }

  // -- DOM construction ---------------------------------------------------

  private buildShell(): void {
    this.root.innerHTML = "";
    const doc = this.root.ownerDocument;

    const banner = doc.createElement("div");
    banner.className = "banner hidden";
    banner.setAttribute("role", "alert");

    const header = doc.createElement("header");
    const title = doc.createElement("h1");
    title.textContent = "Pareto front explorer";
    const subtitle = doc.createElement("p");
    subtitle.className = "subtitle";
    subtitle.textContent =
      "Drag the per-criterion significance sliders; the highlighted point is the server's selection.";
    header.append(title, subtitle);

    const controls = doc.createElement("section");
    controls.className = "controls";

    const view = doc.createElement("section");
    view.className = "view";
    const scatterBox = doc.createElement("div");
    scatterBox.className = "scatter-box";
    const panel = doc.createElement("aside");
    panel.className = "panel";
    view.append(scatterBox, panel);

    this.root.append(banner, header, controls, view);
  }

  private buildControls(): void {
    if (this.pareto === null) return;
    const doc = this.root.ownerDocument;
    const controls = this.query(".controls");
    controls.innerHTML = "";

    this.pareto.criteria_names.forEach((name, index) => {
      const row = doc.createElement("div");
      row.className = "slider-row";

      const label = doc.createElement("label");
      label.className = "slider-label";
      label.textContent = name;

      const slider = doc.createElement("input");
      slider.type = "range";
      slider.min = "0";
      slider.max = "1";
      slider.step = SLIDER_STEP;
      slider.value = String(this.state.phi[index]);
      slider.className = "phi-slider";
      slider.dataset.index = String(index);
      slider.addEventListener("input", () => {
        this.onSliderInput(index, Number(slider.value));
        slider.value = String(this.state.phi[index]);
      });

      const readout = doc.createElement("span");
      readout.className = "slider-value";
      readout.textContent = this.formatWeight(this.state.phi[index]);

      row.append(label, slider, readout);
      controls.append(row);
    });

    const validation = doc.createElement("div");
    validation.className = "validation hidden";
    controls.append(validation);

    const pairRow = doc.createElement("div");
    pairRow.className = "pair-row";
    const pairLabel = doc.createElement("label");
    pairLabel.className = "pair-label";
    pairLabel.textContent = "axes";
    const pairSelect = doc.createElement("select");
    pairSelect.className = "pair-select";
    for (const [x, y] of criteriaPairs(this.pareto.criteria_names.length)) {
      const option = doc.createElement("option");
      option.value = `${x},${y}`;
      option.textContent = `${this.pareto.criteria_names[x]} vs ${this.pareto.criteria_names[y]}`;
      pairSelect.append(option);
    }
    pairSelect.addEventListener("change", () => {
      const [x, y] = pairSelect.value.split(",").map(Number);
      this.state = withCriteriaPair(this.state, x, y);
      this.renderView();
    });
    pairRow.append(pairLabel, pairSelect);
    controls.append(pairRow);
  }

  // -- events -------------------------------------------------------------

  private onSliderInput(index: number, rawValue: number): void {
    // Clamp before the value can reach the state or the wire; a hand-edited
    // or out-of-range input must never produce an invalid request.
    this.state = withWeight(this.state, index, clampWeight(rawValue));
    const readout = this.root.querySelectorAll<HTMLElement>(".slider-value")[index];
    if (readout) {
      readout.textContent = this.formatWeight(this.state.phi[index]);
    }
    this.gate.schedule(this.state.phi);
  }

  private async submit(phi: number[]): Promise<void> {
    const result = await this.api.select(phi);
    if (result.kind === "ok") {
      this.state = withResponse(this.state, result.payload);
      this.appliedPhi = phi;
      this.hideBanner();
      this.hideValidation();
      this.renderView();
      this.options.onSelectionApplied?.(result.payload);
      return;
    }
    // Both failure kinds keep the last good view on screen.
    if (result.kind === "invalid") {
      this.showValidation(`The server rejected the weights: ${result.message}`);
    } else {
      this.showBanner(`Selection request failed: ${result.message}`);
    }
  }

  // -- rendering ----------------------------------------------------------

  private renderView(): void {
    if (this.pareto === null) return;
    const doc = this.root.ownerDocument;

    const scatterBox = this.query(".scatter-box");
    scatterBox.innerHTML = "";
    scatterBox.append(
      renderScatter(
        doc,
        this.pareto,
        this.state.criteriaPair,
        this.state.lastResponse?.selected_id ?? null,
      ),
    );

    const panel = this.query(".panel");
    panel.innerHTML = "";
    panel.append(
      renderPanel(doc, this.state.lastResponse, this.appliedPhi, this.pareto.criteria_names),
    );
  }

  private formatWeight(value: number): string {
    return value.toFixed(2);
  }

  // -- error surfaces -----------------------------------------------------

  private showBanner(message: string): void {
    const banner = this.query(".banner");
    banner.textContent = message;
    banner.classList.remove("hidden");
    this.options.onErrorShown?.(message);
  }

  private hideBanner(): void {
    this.query(".banner").classList.add("hidden");
  }

  private showValidation(message: string): void {
    const validation = this.query(".validation");
    validation.textContent = message;
    validation.classList.remove("hidden");
    this.options.onErrorShown?.(message);
  }

  private hideValidation(): void {
    const validation = this.root.querySelector(".validation");
    if (validation) {
      validation.classList.add("hidden");
    }
  }

  private query(selector: string): HTMLElement {
    const el = this.root.querySelector<HTMLElement>(selector);
    if (el === null) {
      throw new Error(`explorer shell is missing ${selector}`);
    }
    return el;
  }
}

/** Browser entry point: mount on #app against the serving origin. */
export function mount(): void {
  const root = document.getElementById("app");
  if (root !== null) {
    void new ExplorerApp(root).init();
  }
}

if (typeof document !== "undefined" && document.getElementById("app") !== null) {
  mount();
}
