/** Minimal demo player: a clocked playhead with play/pause/seek events.
 *  Stands in for a real video element so the whole system runs without one;
 *  tests drive it by calling tick() directly. */

export type PlayerEvent = "timeupdate" | "play" | "pause" | "seek";

export class DemoPlayer {
  playheadMs = 0;
  playing = false;
  private listeners = new Map<PlayerEvent, Set<(p: DemoPlayer) => void>>();
  private clock: ReturnType<typeof setInterval> | null = null;

  constructor(public durationMs: number) {}

  on(event: PlayerEvent, cb: (p: DemoPlayer) => void): () => void {
    if (!this.listeners.has(event)) this.listeners.set(event, new Set());
    this.listeners.get(event)!.add(cb);
    return () => this.listeners.get(event)!.delete(cb);
  }

  private emit(event: PlayerEvent): void {
    for (const cb of this.listeners.get(event) ?? []) cb(this);
  }

  play(): void {
    if (this.playing) return;
    this.playing = true;
    this.emit("play");
  }

  pause(): void {
    if (!this.playing) return;
    this.playing = false;
    this.emit("pause");
  }

  seek(ms: number): void {
    this.playheadMs = Math.min(Math.max(0, ms), this.durationMs);
    this.emit("seek");
    this.emit("timeupdate");
  }

  /** Advance the playhead while playing; pauses at the end. */
  tick(dtMs: number): void {
    if (!this.playing) return;
    this.playheadMs = Math.min(this.playheadMs + dtMs, this.durationMs);
    if (this.playheadMs >= this.durationMs) this.pause();
    this.emit("timeupdate");
  }

  startClock(intervalMs = 100): void {
    if (this.clock !== null) return;
    this.clock = setInterval(() => this.tick(intervalMs), intervalMs);
  }

  stopClock(): void {
    if (this.clock !== null) clearInterval(this.clock);
    this.clock = null;
  }
}
