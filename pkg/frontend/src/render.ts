/** Shared rendering helpers: result-driven fills, legends, number formatting. */

import { paletteColors, paletteSample } from "./palette.js";
import type { BinningResult, GeoFeature, PaletteWire } from "./types.js";

export function formatNumber(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

/** Fill color per feature for a binning result; never computes bins locally. */
export function fillFromResult(
  result: BinningResult,
  palette: PaletteWire,
  reverse: boolean,
): (feature: GeoFeature) => string {
  const k = result.binSizes.length;
  const swatches = paletteColors(palette, k, reverse);
  return (feature) => {
    const fid = feature.properties.__id;
    if (result.unclassedPositions) {
      const t = result.unclassedPositions[fid];
      return t == null ? palette.nodataColor : paletteSample(palette, t, reverse);
    }
    const bin = result.assignments[fid];
    return bin == null ? palette.nodataColor : swatches[bin - 1];
  };
}

export function legendElement(
  result: BinningResult,
  palette: PaletteWire,
  reverse: boolean,
): HTMLElement {
  const k = result.binSizes.length;
  const swatches = paletteColors(palette, k, reverse);
  const legend = document.createElement("div");
  legend.className = "legend";
  for (let j = 0; j < k; j++) {
    const row = document.createElement("div");
    row.className = "legend-row";
    const chip = document.createElement("span");
    chip.className = "legend-chip";
    chip.style.background = swatches[j];
    const label = document.createElement("span");
    label.textContent = `${formatNumber(result.extents[j])} to ${formatNumber(result.extents[j + 1])}`;
    row.append(chip, label);
    legend.appendChild(row);
  }
  const nodata = document.createElement("div");
  nodata.className = "legend-row";
  const chip = document.createElement("span");
  chip.className = "legend-chip";
  chip.style.background = palette.nodataColor;
  const label = document.createElement("span");
  label.textContent = "no data";
  nodata.append(chip, label);
  legend.appendChild(nodata);
  return legend;
}

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text != null) node.textContent = text;
  return node;
}
