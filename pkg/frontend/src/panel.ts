/** The shared data & configurations panel: dataset, binning inputs, colors. */

import { type AppContext } from "./context.js";
import { el, formatNumber } from "./render.js";
import type { ProfileWire } from "./types.js";

export interface PanelHooks {
  onBinCountChange(): Promise<void>;
  onIntervalSizeChange(): Promise<void>;
  onPaletteChange(): Promise<void>;
}

export class ConfigPanel {
  private profile: ProfileWire | null = null;
  private showMissing = true;

  constructor(
    private ctx: AppContext,
    private hooks: PanelHooks,
  ) {}

  async load(): Promise<void> {
    const info = await this.ctx.api.datasetInfo(this.ctx.store.state.datasetId);
    this.profile = info.profile;
  }

  render(container: HTMLElement): void {
    container.textContent = "";
    container.appendChild(this.datasetSection());
    container.appendChild(this.binningSection());
    container.appendChild(this.colorSection());
  }

  private datasetSection(): HTMLElement {
    const section = el("section", "panel-section dataset-section");
    section.appendChild(el("h2", undefined, "Dataset"));
    section.appendChild(
      el("p", "dataset-name", `${this.ctx.store.state.datasetId} / ${this.ctx.store.state.attribute}`),
    );
    if (this.profile) {
      const p = this.profile;
      const stats = el("dl", "profile-stats");
      const entries: [string, string][] = [
        ["count", String(this.showMissing ? p.count : p.count - p.missingCount)],
        ["missing", this.showMissing ? String(p.missingCount) : "hidden"],
        ["min", formatNumber(p.min)],
        ["max", formatNumber(p.max)],
        ["mean", formatNumber(p.mean)],
        ["median", formatNumber(p.median)],
        ["std dev", formatNumber(p.stdDev)],
        ["skewness", formatNumber(p.skewness)],
      ];
      for (const [term, value] of entries) {
        stats.appendChild(el("dt", undefined, term));
        stats.appendChild(el("dd", undefined, value));
      }
      section.appendChild(stats);

      const toggle = el("label", "missing-toggle");
      const checkbox = document.createElement("input");
      checkbox.type = "checkbox";
      checkbox.checked = this.showMissing;
      checkbox.addEventListener("change", () => {
        this.showMissing = checkbox.checked;
        this.render(container(section));
      });
      toggle.append(checkbox, document.createTextNode("show missing values"));
      section.appendChild(toggle);

      const histogram = el("div", "histogram");
      const maxCount = Math.max(1, ...p.histogram.counts);
      for (const count of p.histogram.counts) {
        const bar = el("span", "histogram-bar");
        bar.style.height = `${((count / maxCount) * 40).toFixed(1)}px`;
        bar.title = String(count);
        histogram.appendChild(bar);
      }
      section.appendChild(histogram);
    }
    return section;
  }

  private binningSection(): HTMLElement {
    const { store } = this.ctx;
    const section = el("section", "panel-section binning-section");
    section.appendChild(el("h2", undefined, "Data binning"));

    const binRow = el("label", "config-row", "Bin count ");
    const binInput = document.createElement("input");
    binInput.type = "number";
    binInput.min = "1";
    binInput.id = "bin-count";
    binInput.value = String(store.state.binCount);
    binInput.addEventListener("change", () => {
      const k = Math.max(1, Math.floor(Number(binInput.value)));
      store.update({ binCount: k });
      void this.hooks.onBinCountChange();
    });
    binRow.appendChild(binInput);
    section.appendChild(binRow);

    const sizeRow = el("label", "config-row", "Defined interval size ");
    const sizeInput = document.createElement("input");
    sizeInput.type = "number";
    sizeInput.step = "any";
    sizeInput.id = "interval-size";
    if (store.state.definedIntervalSize != null) {
      sizeInput.value = String(store.state.definedIntervalSize);
    }
    sizeInput.addEventListener("change", () => {
      const size = Number(sizeInput.value);
      store.update({ definedIntervalSize: Number.isFinite(size) && size > 0 ? size : null });
      void this.hooks.onIntervalSizeChange();
    });
    sizeRow.appendChild(sizeInput);
    section.appendChild(sizeRow);
    return section;
  }

  private colorSection(): HTMLElement {
    const { store } = this.ctx;
    const section = el("section", "panel-section color-section");
    section.appendChild(el("h2", undefined, "Color scheme"));

    const select = document.createElement("select");
    select.id = "palette-select";
    const current = el("option", undefined, store.state.paletteName);
    current.setAttribute("value", store.state.paletteName);
    current.setAttribute("selected", "selected");
    select.appendChild(current);
    select.addEventListener("change", () => {
      store.update({ paletteName: select.value });
      void this.hooks.onPaletteChange();
    });
    void this.populatePalettes(select);
    section.appendChild(select);

    const reverse = el("label", "config-row");
    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.id = "palette-reverse";
    checkbox.checked = store.state.reversePalette;
    checkbox.addEventListener("change", () => {
      store.update({ reversePalette: checkbox.checked });
      void this.hooks.onPaletteChange();
    });
    reverse.append(checkbox, document.createTextNode("reverse"));
    section.appendChild(reverse);

    const filters = el("div", "flag-filters");
    for (const flag of ["web_friendly", "colorblind_friendly", "print_friendly"]) {
      const label = el("label", "config-row");
      const box = document.createElement("input");
      box.type = "checkbox";
      box.value = flag;
      box.checked = store.state.flagFilters.includes(flag);
      box.addEventListener("change", () => {
        const flags = box.checked
          ? [...store.state.flagFilters, flag]
          : store.state.flagFilters.filter((f) => f !== flag);
        store.update({ flagFilters: flags });
        void this.populatePalettes(select);
      });
      label.append(box, document.createTextNode(flag.replace("_", " ")));
      filters.appendChild(label);
    }
    section.appendChild(filters);
    return section;
  }

  private async populatePalettes(select: HTMLSelectElement): Promise<void> {
    const { palettes } = await this.ctx.api.palettes(this.ctx.store.state.flagFilters);
    const selected = this.ctx.store.state.paletteName;
    select.textContent = "";
    for (const palette of palettes) {
      const option = document.createElement("option");
      option.value = palette.name;
      option.textContent = `${palette.name} (${palette.scaleType.replace(/_/g, " ")})`;
      if (palette.name === selected) option.selected = true;
      select.appendChild(option);
    }
  }
}

function container(node: HTMLElement): HTMLElement {
  return (node.parentElement ?? node) as HTMLElement;
}
