/**
 * Debounced "latest wins" request gate for slider-driven selections.
 *
 * A burst of slider movements collapses into one request shortly after the
 * burst ends. At most one request is in flight; values scheduled while it
 * runs replace each other, and only the newest is sent once it settles, so
 * the final slider position always produces the final applied response.
 */

export class SelectionGate {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: number[] | null = null;
  private inFlight = false;

  constructor(
    private readonly delayMs: number,
    private readonly send: (phi: number[]) => Promise<void>,
  ) {}

  /** Remember `phi` as the newest value and (re)start the debounce timer. */
  schedule(phi: number[]): void {
    this.pending = phi.slice();
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.flush();
    }, this.delayMs);
  }

  private async flush(): Promise<void> {
    if (this.inFlight || this.pending === null) {
      return;
    }
    const phi = this.pending;
    this.pending = null;
    this.inFlight = true;
    try {
      await this.send(phi);
    } finally {
      this.inFlight = false;
      if (this.pending !== null) {
        // A newer value arrived while the request was in flight.
        void this.flush();
      }
    }
  }
}
