import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { SelectionGate } from "../src/scheduler.js";

describe("SelectionGate", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("collapses a burst into one request with the newest value", async () => {
    const sent: number[][] = [];
    const gate = new SelectionGate(100, async phi => {
      sent.push(phi);
    });
    gate.schedule([0.1, 0.1]);
    await vi.advanceTimersByTimeAsync(50);
    gate.schedule([0.2, 0.2]);
    await vi.advanceTimersByTimeAsync(50);
    gate.schedule([0.3, 0.3]);
    expect(sent).toEqual([]);
    await vi.advanceTimersByTimeAsync(100);
    expect(sent).toEqual([[0.3, 0.3]]);
  });

  it("waits the full delay before sending", async () => {
    const sent: number[][] = [];
    const gate = new SelectionGate(100, async phi => {
      sent.push(phi);
    });
    gate.schedule([1, 0]);
    await vi.advanceTimersByTimeAsync(99);
    expect(sent).toEqual([]);
    await vi.advanceTimersByTimeAsync(1);
    expect(sent).toEqual([[1, 0]]);
  });

  it("keeps one request in flight and sends only the newest follow-up", async () => {
    const sent: number[][] = [];
    let release: (() => void) | null = null;
    const gate = new SelectionGate(10, phi => {
      sent.push(phi);
      return new Promise<void>(resolve => {
        release = resolve;
      });
    });

    gate.schedule([0.1, 0.1]);
    await vi.advanceTimersByTimeAsync(10);
    expect(sent).toEqual([[0.1, 0.1]]);

    // Two newer values while the first request is still pending.
    gate.schedule([0.2, 0.2]);
    await vi.advanceTimersByTimeAsync(10);
    gate.schedule([0.3, 0.3]);
    await vi.advanceTimersByTimeAsync(10);
    expect(sent).toEqual([[0.1, 0.1]]);

    release!();
    await vi.advanceTimersByTimeAsync(0);
    expect(sent).toEqual([[0.1, 0.1], [0.3, 0.3]]);
  });

  it("copies the scheduled array so later mutation cannot leak in", async () => {
    const sent: number[][] = [];
    const gate = new SelectionGate(10, async phi => {
      sent.push(phi);
    });
    const phi = [0.4, 0.4];
    gate.schedule(phi);
    phi[0] = 99;
    await vi.advanceTimersByTimeAsync(10);
    expect(sent).toEqual([[0.4, 0.4]]);
  });
});
