/** Browse: the sixteen-card catalog of choropleths, reorderable and hidable. */

import { methodsDependingOn, specFor, type AppContext } from "../context.js";
import { renderMap } from "../geo.js";
import { el, fillFromResult, formatNumber, legendElement } from "../render.js";
import { openExportDialog } from "./exportDialog.js";

export class BrowseView {
  constructor(
    private ctx: AppContext,
    private onEdit: (methodId: string) => void,
  ) {}

  /** Fetch every method once; later parameter changes refresh selectively. */
  async load(): Promise<void> {
    const { store, api } = this.ctx;
    const generation = store.nextGeneration("browse");
    const results = await api.binAll(
      store.state.datasetId,
      store.state.binCount,
      store.state.definedIntervalSize,
    );
    if (!store.isCurrent("browse", generation)) return;
    this.ctx.results.clear();
    for (const [methodId, result] of Object.entries(results)) {
      this.ctx.results.set(methodId, result);
    }
    if (store.state.cardOrder.length === 0) {
      store.update({ cardOrder: this.ctx.methods.map((d) => d.methodId) });
    }
  }

  /** Re-fetch only the methods that take the changed parameter as input. */
  async refreshDependents(parameter: "bin_count" | "defined_interval_size"): Promise<void> {
    const { api, store } = this.ctx;
    const dependents = methodsDependingOn(this.ctx, parameter).filter(
      (m) => this.ctx.results.has(m),
    );
    const generation = store.nextGeneration("browse");
    const fresh = await Promise.all(
      dependents.map((methodId) =>
        api.bin(store.state.datasetId, specFor(this.ctx, methodId)),
      ),
    );
    if (!store.isCurrent("browse", generation)) return;
    dependents.forEach((methodId, i) => this.ctx.results.set(methodId, fresh[i]));
  }

  render(container: HTMLElement): void {
    const { store } = this.ctx;
    container.textContent = "";
    const grid = el("div", "card-grid");
    const visible = store.state.cardOrder.filter(
      (m) => !store.state.hiddenMethods.includes(m),
    );
    for (const methodId of visible) {
      const result = this.ctx.results.get(methodId);
      const descriptor = this.ctx.methods.find((d) => d.methodId === methodId);
      if (!result || !descriptor) continue;

      const card = el("div", "card");
      card.dataset.methodId = methodId;
      card.draggable = true;
      card.addEventListener("dragstart", (event) => {
        (event as DragEvent).dataTransfer?.setData("text/method", methodId);
      });
      card.addEventListener("dragover", (event) => event.preventDefault());
      card.addEventListener("drop", (event) => {
        const dragged = (event as DragEvent).dataTransfer?.getData("text/method");
        if (dragged && dragged !== methodId) {
          store.moveCard(dragged, store.state.cardOrder.indexOf(methodId));
          this.render(container);
        }
      });

      const header = el("div", "card-header");
      header.appendChild(el("h3", "card-title", descriptor.displayName));
      const actions = el("div", "card-actions");
      const expand = el("button", "icon-button", "expand");
      expand.dataset.action = "expand";
      expand.addEventListener("click", () => this.openDetail(container, methodId));
      const hide = el("button", "icon-button", "hide");
      hide.dataset.action = "hide";
      hide.addEventListener("click", () => {
        store.toggleHidden(methodId);
        this.render(container);
      });
      const edit = el("button", "icon-button", "edit");
      edit.dataset.action = "edit";
      edit.addEventListener("click", () => this.onEdit(methodId));
      const exportButton = el("button", "icon-button", "export");
      exportButton.dataset.action = "export";
      exportButton.addEventListener("click", () =>
        openExportDialog(this.ctx, methodId, result),
      );
      actions.append(expand, hide, edit, exportButton);
      header.appendChild(actions);
      card.appendChild(header);

      card.appendChild(
        el("p", "card-description", descriptor.shortDescription),
      );
      const map = renderMap(this.ctx.geometry, {
        fillFor: fillFromResult(result, this.ctx.palette, store.state.reversePalette),
        tooltipFor: (feature) =>
          `${feature.properties.__id}: ${
            feature.properties.__value == null
              ? "no data"
              : formatNumber(feature.properties.__value as number)
          }`,
      });
      card.appendChild(map);
      card.appendChild(
        legendElement(result, this.ctx.palette, store.state.reversePalette),
      );
      grid.appendChild(card);
    }
    container.appendChild(grid);
  }

  private openDetail(container: HTMLElement, methodId: string): void {
    const result = this.ctx.results.get(methodId);
    const descriptor = this.ctx.methods.find((d) => d.methodId === methodId);
    if (!result || !descriptor) return;
    const overlay = el("div", "detail-overlay");
    const panel = el("div", "detail-panel");
    panel.appendChild(el("h2", undefined, descriptor.displayName));
    panel.appendChild(el("p", undefined, descriptor.longDescription));
    panel.appendChild(
      el("p", "detail-breaks", `breaks: ${result.extents.map(formatNumber).join(", ")}`),
    );
    panel.appendChild(
      el("p", "detail-sizes", `sizes: ${result.binSizes.join(", ")}`),
    );
    const close = el("button", undefined, "close");
    close.addEventListener("click", () => overlay.remove());
    panel.appendChild(close);
    overlay.appendChild(panel);
    container.appendChild(overlay);
  }
}
