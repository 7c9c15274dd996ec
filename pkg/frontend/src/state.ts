/**
 * Explorer state and the pure transitions the UI applies to it.
 *
 * The state never holds an out-of-range weight: every write path goes
 * through clamping, so a request built from it is always valid. Selection
 * itself is the server's job; the only response-derived field kept here is
 * the last payload the server returned.
 */

import type { SelectPayload } from "./api.js";

export interface ExplorerState {
  /** One weight per criterion, each within [0, 1]. */
  phi: number[];
  /** Distinct criterion indices plotted on the x and y axes. */
  criteriaPair: [number, number];
  /** Most recent successful selection response, if any. */
  lastResponse: SelectPayload | null;
}

/** Slider position given to every criterion before the user touches one. */
export const DEFAULT_WEIGHT = 0.5;

/** Clamp a raw slider value into [0, 1]; non-finite input becomes 0. */
export const clampWeight = (value: number): number =>
  Number.isFinite(value) ? Math.min(1, Math.max(0, value)) : 0;

export const allZero = (phi: number[]): boolean => phi.every(v => v === 0);

/** Indices of weights that are exactly zero (their criteria cannot move scores). */
export const zeroComponents = (phi: number[]): number[] =>
  phi.flatMap((v, i) => (v === 0 ? [i] : []));

/** All unordered criterion pairs (i < j), in axis-selector order. */
export function criteriaPairs(nCriteria: number): Array<[number, number]> {
  const pairs: Array<[number, number]> = [];
  for (let i = 0; i < nCriteria; i++) {
    for (let j = i + 1; j < nCriteria; j++) {
      pairs.push([i, j]);
    }
  }
  return pairs;
}

export function initialState(nCriteria: number): ExplorerState {
  if (!Number.isInteger(nCriteria) || nCriteria < 2) {
    throw new Error(`explorer needs at least 2 criteria, got ${nCriteria}`);
  }
  return {
    phi: Array(nCriteria).fill(DEFAULT_WEIGHT),
    criteriaPair: [0, 1],
    lastResponse: null,
  };
}

/** Replace one weight, clamped into range; other fields are untouched. */
export function withWeight(
  state: ExplorerState,
  index: number,
  rawValue: number,
): ExplorerState {
  if (!Number.isInteger(index) || index < 0 || index >= state.phi.length) {
    throw new Error(`weight index ${index} out of range`);
  }
  const phi = state.phi.slice();
  phi[index] = clampWeight(rawValue);
  return { ...state, phi };
}

/** Switch the scatter's axis pair; indices must be distinct and in range. */
export function withCriteriaPair(
  state: ExplorerState,
  x: number,
  y: number,
): ExplorerState {
  const n = state.phi.length;
  const valid = (i: number) => Number.isInteger(i) && i >= 0 && i < n;
  if (!valid(x) || !valid(y) || x === y) {
    throw new Error(`invalid criteria pair (${x}, ${y}) for ${n} criteria`);
  }
  return { ...state, criteriaPair: [x, y] };
}

export function withResponse(
  state: ExplorerState,
  response: SelectPayload,
): ExplorerState {
  return { ...state, lastResponse: response };
}

/**
 * True when the server substituted the midpoint weights: the request was
 * all-zero but the resolved vector is not.
 */
export const midpointSubstituted = (
  sentPhi: number[],
  resolvedPhi: number[],
): boolean => allZero(sentPhi) && !allZero(resolvedPhi);
