/** Compare: dot plot of the distribution over stacked bars, one row per method. */

import { type AppContext } from "../context.js";
import { paletteColors } from "../palette.js";
import { el, formatNumber } from "../render.js";
import type { CompareResponse } from "../types.js";

const ROW_MAX_HEIGHT = 46;
const ROW_MIN_HEIGHT = 6;

export class CompareView {
  private table: CompareResponse | null = null;

  constructor(private ctx: AppContext) {}

  async load(): Promise<void> {
    const { api, store } = this.ctx;
    const generation = store.nextGeneration("compare");
    const visible = store.state.cardOrder.filter(
      (m) => !store.state.hiddenMethods.includes(m),
    );
    const table = await api.compare(
      store.state.datasetId,
      visible.length ? visible : null,
      store.state.binCount,
      store.state.definedIntervalSize,
    );
    if (!store.isCurrent("compare", generation)) return;
    this.table = table;
  }

  render(container: HTMLElement): void {
    container.textContent = "";
    if (!this.table) return;
    const { store } = this.ctx;

    container.appendChild(this.dotPlot());

    const ordered = [...this.table.methods].sort(
      (a, b) =>
        store.state.cardOrder.indexOf(a.methodId) -
        store.state.cardOrder.indexOf(b.methodId),
    );
    const min = Math.min(...ordered.flatMap((m) => m.bins.map((b) => b.extent[0])));
    const max = Math.max(...ordered.flatMap((m) => m.bins.map((b) => b.extent[1])));
    const span = max - min || 1;
    const maxSize = Math.max(1, ...ordered.flatMap((m) => m.bins.map((b) => b.size)));

    for (const method of ordered) {
      const row = el("div", "compare-row");
      row.dataset.methodId = method.methodId;
      row.draggable = true;
      row.addEventListener("dragstart", (event) => {
        (event as DragEvent).dataTransfer?.setData("text/method", method.methodId);
      });
      row.addEventListener("dragover", (event) => event.preventDefault());
      row.addEventListener("drop", (event) => {
        const dragged = (event as DragEvent).dataTransfer?.getData("text/method");
        if (dragged && dragged !== method.methodId) {
          store.moveCard(dragged, store.state.cardOrder.indexOf(method.methodId));
          this.render(container);
        }
      });
      row.appendChild(el("span", "compare-label", method.methodId));

      const track = el("div", "compare-track");
      const colors = paletteColors(
        this.ctx.palette,
        method.binCount,
        store.state.reversePalette,
      );
      method.bins.forEach((bin, index) => {
        const widthPct = (bin.interval / span) * 100;
        if (bin.size === 0) {
          const connector = el("div", "compare-connector");
          connector.style.width = `${widthPct}%`;
          connector.title = `size ${bin.size}, extent ${formatNumber(bin.extent[0])} to ${formatNumber(bin.extent[1])}, interval ${formatNumber(bin.interval)}`;
          track.appendChild(connector);
          return;
        }
        const bar = el("div", "compare-bar");
        bar.style.width = `${widthPct}%`;
        const height =
          ROW_MIN_HEIGHT + (ROW_MAX_HEIGHT - ROW_MIN_HEIGHT) * (bin.size / maxSize);
        bar.style.height = `${height.toFixed(2)}px`;
        bar.style.background = colors[index] ?? colors[colors.length - 1];
        bar.title = `size ${bin.size}, extent ${formatNumber(bin.extent[0])} to ${formatNumber(bin.extent[1])}, interval ${formatNumber(bin.interval)}`;
        track.appendChild(bar);
      });
      row.appendChild(track);
      container.appendChild(row);
    }
  }

  private dotPlot(): HTMLElement {
    const values = this.ctx.geometry.features
      .map((f) => f.properties.__value)
      .filter((v): v is number => v != null);
    const min = Math.min(...values);
    const max = Math.max(...values);
    const span = max - min || 1;
    const plot = el("div", "dot-plot");
    for (const value of values) {
      const dot = el("span", "dot");
      dot.style.left = `${(((value - min) / span) * 100).toFixed(2)}%`;
      dot.title = formatNumber(value);
      plot.appendChild(dot);
    }
    return plot;
  }
}
