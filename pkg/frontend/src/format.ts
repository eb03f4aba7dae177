/** Playhead rendering for timestamp inserts: M:SS, or H:MM:SS past an hour. */

export function formatTimestamp(ms: number): string {
  const totalS = Math.floor(Math.max(0, ms) / 1000);
  const h = Math.floor(totalS / 3600);
  const m = Math.floor((totalS % 3600) / 60);
  const s = totalS % 60;
  const pad = (n: number) => String(n).padStart(2, "0");
  return h > 0 ? `${h}:${pad(m)}:${pad(s)}` : `${m}:${pad(s)}`;
}
