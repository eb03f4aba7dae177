/** Notification beep for accessibility mode. Prefers the shipped wav asset;
 *  falls back to a WebAudio oscillator at the same pitch and length. */

export const BEEP_FREQ_HZ = 880;
export const BEEP_LENGTH_MS = 150;

export type BeepFn = () => void;

export function makeBeep(assetUrl = new URL("../assets/beep.wav", import.meta.url).href): BeepFn {
  return () => {
    try {
      void new Audio(assetUrl).play();
    } catch {
      oscillatorBeep();
    }
  };
}

function oscillatorBeep(): void {
  const Ctx = window.AudioContext;
  if (!Ctx) return;
  const ctx = new Ctx();
  const osc = ctx.createOscillator();
  osc.frequency.value = BEEP_FREQ_HZ;
  osc.connect(ctx.destination);
  osc.start();
  osc.stop(ctx.currentTime + BEEP_LENGTH_MS / 1000);
  osc.onended = () => void ctx.close();
}
