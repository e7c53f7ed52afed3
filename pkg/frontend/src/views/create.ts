/** Create: manual break editing, paint mode, save-as-new-method. */

import { ApiError } from "../api.js";
import { type AppContext } from "../context.js";
import { renderMap } from "../geo.js";
import { paletteColors } from "../palette.js";
import { el, fillFromResult, formatNumber } from "../render.js";
import type { BinningResult, GeoFeature } from "../types.js";

export const MISUSE_WARNING =
  "We recommend using this feature only for educational purposes.";

export class CreateView {
  extents: number[] = [];
  result: BinningResult | null = null;
  seedMethodId = "natural_breaks";
  private constraintLog: { featureId: string; targetBin: number }[] = [];

  constructor(private ctx: AppContext) {}

  /** Seed the editor from an established method's output. */
  async seed(methodId: string = this.seedMethodId): Promise<void> {
    const { api, store } = this.ctx;
    this.seedMethodId = methodId;
    const result = await api.bin(store.state.datasetId, {
      methodId,
      binCount: store.state.binCount,
    });
    this.extents = [...result.extents];
    this.result = result;
    this.constraintLog = [];
  }

  /** Every change re-binned server-side: the view never assigns values itself. */
  private async rebin(extents: number[]): Promise<void> {
    const result = await this.ctx.api.bin(this.ctx.store.state.datasetId, {
      methodId: "manual_interval",
      manualBreaks: extents,
    });
    this.extents = [...result.extents];
    this.result = result;
  }

  render(container: HTMLElement): void {
    container.textContent = "";
    const { store } = this.ctx;

    const layout = el("div", "create-layout");
    const panel = el("div", "create-panel");

    // manual configuration: one numeric input per extent, add/remove controls
    const manual = el("div", "manual-config");
    manual.appendChild(el("h3", undefined, "Manual configuration"));
    const resetRow = el("div", "reset-row");
    const methodSelect = document.createElement("select");
    for (const descriptor of this.ctx.methods) {
      if (descriptor.methodId === "manual_interval") continue;
      const option = document.createElement("option");
      option.value = descriptor.methodId;
      option.textContent = descriptor.displayName;
      if (descriptor.methodId === this.seedMethodId) option.selected = true;
      methodSelect.appendChild(option);
    }
    const resetButton = el("button", undefined, "reset");
    resetButton.dataset.action = "reset";
    resetButton.addEventListener("click", async () => {
      await this.seed(methodSelect.value);
      this.render(container);
    });
    resetRow.append(methodSelect, resetButton);
    manual.appendChild(resetRow);

    const k = this.extents.length - 1;
    const swatches = this.result
      ? paletteColors(this.ctx.palette, Math.max(k, 1), store.state.reversePalette)
      : [];
    this.extents.forEach((value, index) => {
      const row = el("div", "extent-row");
      if (index < k) {
        const chip = el("span", "legend-chip");
        chip.style.background = swatches[index] ?? "#ffffff";
        row.appendChild(chip);
      }
      const input = document.createElement("input");
      input.type = "number";
      input.step = "any";
      input.value = String(value);
      input.dataset.extentIndex = String(index);
      input.addEventListener("change", async () => {
        const next = [...this.extents];
        next[index] = Number(input.value);
        if (next.some((e, i) => i > 0 && e <= next[i - 1])) {
          this.showError(container, "extents must stay strictly increasing");
          input.value = String(value);
          return;
        }
        await this.rebin(next.slice(1, -1).length ? next : next);
        this.render(container);
      });
      row.appendChild(input);
      if (index > 0 && index < this.extents.length - 1) {
        const remove = el("button", "icon-button", "x");
        remove.dataset.action = "remove-break";
        remove.addEventListener("click", async () => {
          const next = this.extents.filter((_, i) => i !== index);
          await this.rebin(next);
          this.render(container);
        });
        row.appendChild(remove);
      }
      manual.appendChild(row);
    });
    const addRow = el("div", "add-row");
    const addInput = document.createElement("input");
    addInput.type = "number";
    addInput.step = "any";
    addInput.placeholder = "new break";
    const addButton = el("button", undefined, "add bin");
    addButton.dataset.action = "add-break";
    addButton.addEventListener("click", async () => {
      const value = Number(addInput.value);
      if (!Number.isFinite(value)) return;
      const next = [...this.extents, value].sort((a, b) => a - b);
      if (new Set(next).size !== next.length) {
        this.showError(container, "break already exists");
        return;
      }
      await this.rebin(next);
      this.render(container);
    });
    addRow.append(addInput, addButton);
    manual.appendChild(addRow);
    panel.appendChild(manual);

    // paint mode
    const paint = el("div", "paint-mode");
    paint.appendChild(el("h3", undefined, "Paint mode"));
    paint.appendChild(el("p", "misuse-warning", MISUSE_WARNING));
    const swatchBar = el("div", "paint-swatches");
    swatches.forEach((color, index) => {
      const swatch = el("button", "paint-swatch");
      swatch.style.background = color;
      swatch.dataset.paintBin = String(index + 1);
      if (store.state.paintSelectedBin === index + 1) {
        swatch.classList.add("selected");
      }
      swatch.addEventListener("click", () => {
        store.update({
          paintSelectedBin:
            store.state.paintSelectedBin === index + 1 ? null : index + 1,
        });
        this.render(container);
      });
      swatchBar.appendChild(swatch);
    });
    paint.appendChild(swatchBar);
    panel.appendChild(paint);

    // save as new method
    const save = el("div", "save-method");
    save.appendChild(el("h3", undefined, "Save as new binning method"));
    const nameInput = document.createElement("input");
    nameInput.type = "text";
    nameInput.placeholder = "method name";
    const saveButton = el("button", undefined, "save");
    saveButton.dataset.action = "save-method";
    saveButton.addEventListener("click", async () => {
      try {
        await this.ctx.api.saveCustomMethod(nameInput.value, this.extents, {
          seed_method_id: this.seedMethodId,
          constraint_log: this.constraintLog,
        });
        this.showError(container, `saved ${nameInput.value}`);
      } catch (error) {
        this.showError(
          container,
          error instanceof ApiError ? error.message : String(error),
        );
      }
    });
    save.append(nameInput, saveButton);
    panel.appendChild(save);

    layout.appendChild(panel);

    // the live map canvas
    const canvas = el("div", "create-canvas");
    if (this.result) {
      canvas.appendChild(
        renderMap(this.ctx.geometry, {
          width: 480,
          height: 320,
          fillFor: fillFromResult(this.result, this.ctx.palette, store.state.reversePalette),
          tooltipFor: (feature) =>
            `${feature.properties.__id}: bin ${
              this.result?.assignments[feature.properties.__id] ?? "none"
            }`,
          onClickFeature: (feature) => void this.paintFeature(container, feature),
        }),
      );
      canvas.appendChild(
        el(
          "p",
          "create-breaks",
          `breaks: ${this.extents.map(formatNumber).join(", ")}`,
        ),
      );
    }
    layout.appendChild(canvas);
    container.appendChild(layout);
    container.appendChild(el("div", "create-error"));
  }

  /** One paint click: constraint -> solver -> manual re-bin -> re-render. */
  private async paintFeature(container: HTMLElement, feature: GeoFeature): Promise<void> {
    const { store, api } = this.ctx;
    const target = store.state.paintSelectedBin;
    if (target == null || store.state.activeTab !== "create") return;
    const constraint = { featureId: feature.properties.__id, targetBin: target };
    const pending = [...store.state.pendingConstraints, constraint];
    try {
      const solved = await api.paint(store.state.datasetId, this.extents, pending);
      // state changes only after the solver accepted the constraints
      store.update({ pendingConstraints: pending });
      this.constraintLog.push(constraint);
      await this.rebin(solved.extents);
      this.render(container);
    } catch (error) {
      if (error instanceof ApiError) {
        this.showError(container, `${error.code}: ${error.message}`);
        return; // state unchanged
      }
      throw error;
    }
  }

  private showError(container: HTMLElement, message: string): void {
    const slot = container.querySelector(".create-error");
    if (slot) slot.textContent = message;
  }
}
