/** Combine: consensus maps (majority bin, frequency, value-by-alpha) + resiliency. */

import { DEFAULT_COMBINE_MEMBERS } from "../state.js";
import { type AppContext } from "../context.js";
import { renderMap } from "../geo.js";
import { el, fillFromResult } from "../render.js";
import type { CombineResponse, GeoFeature } from "../types.js";

const QUALITATIVE = [
  "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

export class CombineView {
  private response: CombineResponse | null = null;

  constructor(private ctx: AppContext) {}

  async load(): Promise<void> {
    const { api, store } = this.ctx;
    const generation = store.nextGeneration("combine");
    const response = await api.combine(
      store.state.datasetId,
      store.state.combineMembers,
      6,
    );
    if (!store.isCurrent("combine", generation)) return;
    this.response = response;
  }

  render(container: HTMLElement): void {
    container.textContent = "";
    const { store } = this.ctx;

    const picker = el("div", "member-picker");
    for (const methodId of DEFAULT_COMBINE_MEMBERS) {
      const label = el("label", "member-option");
      const checkbox = document.createElement("input");
      checkbox.type = "checkbox";
      checkbox.value = methodId;
      checkbox.checked = store.state.combineMembers.includes(methodId);
      checkbox.addEventListener("change", async () => {
        const members = checkbox.checked
          ? [...store.state.combineMembers, methodId]
          : store.state.combineMembers.filter((m) => m !== methodId);
        store.update({ combineMembers: members });
        await this.load();
        this.render(container);
      });
      label.append(checkbox, document.createTextNode(methodId));
      picker.appendChild(label);
    }
    container.appendChild(picker);

    if (!this.response) return;
    const { matrix, resiliency } = this.response;
    const methodCount = matrix.methods.length;

    const tooltip = (feature: GeoFeature): string => {
      const row = matrix.features[feature.properties.__id];
      if (!row) return `${feature.properties.__id}: no data`;
      const perMethod = matrix.methods
        .map((m, i) => `${m}: ${row.bins[i]}`)
        .join(", ");
      return (
        `${feature.properties.__id} | ${perMethod} | ` +
        `most consistent bin ${row.majorityBin} ` +
        `(${row.majorityFrequency} of ${methodCount})`
      );
    };

    const maps = el("div", "combine-grid");
    maps.appendChild(
      this.mapCard("Most consistent bin", "map-majority", {
        fillFor: (feature) => {
          const row = matrix.features[feature.properties.__id];
          return row
            ? QUALITATIVE[(row.majorityBin - 1) % QUALITATIVE.length]
            : this.ctx.palette.nodataColor;
        },
        tooltipFor: tooltip,
      }),
    );
    maps.appendChild(
      this.mapCard("Frequency of most consistent bin", "map-frequency", {
        fillFor: (feature) => {
          const row = matrix.features[feature.properties.__id];
          if (!row) return this.ctx.palette.nodataColor;
          // sequential blacks: darker = more methods agree
          const t = row.majorityFrequency / methodCount;
          const channel = Math.round(235 - 215 * t);
          return `rgb(${channel},${channel},${channel})`;
        },
        tooltipFor: tooltip,
      }),
    );
    maps.appendChild(
      this.mapCard("Value by alpha", "map-alpha", {
        fillFor: (feature) => {
          const row = matrix.features[feature.properties.__id];
          return row
            ? QUALITATIVE[(row.majorityBin - 1) % QUALITATIVE.length]
            : this.ctx.palette.nodataColor;
        },
        opacityFor: (feature) => {
          const row = matrix.features[feature.properties.__id];
          return row ? row.majorityFrequency / methodCount : 1;
        },
        tooltipFor: tooltip,
      }),
    );
    maps.appendChild(
      this.mapCard("Resiliency", "map-resiliency", {
        fillFor: fillFromResult(resiliency, this.ctx.palette, store.state.reversePalette),
        tooltipFor: tooltip,
      }),
    );
    container.appendChild(maps);
  }

  private mapCard(
    titleText: string,
    className: string,
    options: Parameters<typeof renderMap>[1],
  ): HTMLElement {
    const card = el("div", `combine-card ${className}`);
    card.appendChild(el("h3", undefined, titleText));
    card.appendChild(renderMap(this.ctx.geometry, options));
    return card;
  }
}
