/** Swatch selection from the service's palette records (lookup or stops). */

import type { PaletteWire } from "./types.js";

function rgb(hex: string): [number, number, number] {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

function toHex(channels: [number, number, number]): string {
  return "#" + channels.map((c) => c.toString(16).padStart(2, "0")).join("");
}

function sampleStops(stops: string[], t: number): string {
  const position = t * (stops.length - 1);
  const index = Math.min(Math.floor(position), stops.length - 2);
  const fraction = position - index;
  const a = rgb(stops[index]);
  const b = rgb(stops[index + 1]);
  return toHex([
    Math.round(a[0] + fraction * (b[0] - a[0])),
    Math.round(a[1] + fraction * (b[1] - a[1])),
    Math.round(a[2] + fraction * (b[2] - a[2])),
  ]);
}

export function paletteColors(palette: PaletteWire, k: number, reverse = false): string[] {
  let out: string[];
  if (palette.colors) {
    const rows = Object.keys(palette.colors).map(Number);
    if (rows.includes(k)) {
      out = [...palette.colors[String(k)]];
    } else {
      const smallest = Math.min(...rows);
      const row = palette.colors[String(smallest)];
      if (k === 1) out = [row[Math.floor(row.length / 2)]];
      else if (k === 2) out = [row[0], row[row.length - 1]];
      else out = row.slice(0, k);
    }
  } else if (palette.interpolator) {
    const stops = palette.interpolator.stops;
    if (k === 1) out = [sampleStops(stops, 0.5)];
    else if (palette.interpolator.cyclical) {
      out = Array.from({ length: k }, (_, i) => sampleStops(stops, i / k));
    } else {
      out = Array.from({ length: k }, (_, i) => sampleStops(stops, i / (k - 1)));
    }
  } else {
    out = [];
  }
  return reverse ? out.reverse() : out;
}

/** Continuous sample for unclassed maps. */
export function paletteSample(palette: PaletteWire, t: number, reverse = false): string {
  const position = reverse ? 1 - t : t;
  if (palette.interpolator) return sampleStops(palette.interpolator.stops, position);
  const row = paletteColors(palette, 5, false);
  return row[Math.min(Math.floor(position * row.length), row.length - 1)];
}
