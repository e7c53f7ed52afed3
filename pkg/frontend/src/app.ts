/** Application shell: tabs, panel, view lifecycles. */

import { ApiClient } from "./api.js";
import { type AppContext } from "./context.js";
import { ConfigPanel } from "./panel.js";
import { Store, type Tab } from "./state.js";
import { BrowseView } from "./views/browse.js";
import { CombineView } from "./views/combine.js";
import { CompareView } from "./views/compare.js";
import { CreateView } from "./views/create.js";
import type { BinningResult, PaletteWire } from "./types.js";

const TABS: Tab[] = ["browse", "compare", "combine", "create"];

export class App {
  ctx!: AppContext;
  browse!: BrowseView;
  compare!: CompareView;
  combine!: CombineView;
  create!: CreateView;
  panel!: ConfigPanel;
  private root!: HTMLElement;
  private viewHost!: HTMLElement;
  private createSeeded = false;

  constructor(
    private api: ApiClient,
    public store: Store = new Store(),
  ) {}

  async init(root: HTMLElement): Promise<void> {
    this.root = root;
    const [methods, geometry, palettes] = await Promise.all([
      this.api.methods(),
      this.api.geometry(this.store.state.datasetId),
      this.api.palettes([]),
    ]);
    const palette =
      palettes.palettes.find((p) => p.name === this.store.state.paletteName) ??
      palettes.palettes[0];
    this.ctx = {
      api: this.api,
      store: this.store,
      geometry,
      methods,
      palette,
      results: new Map<string, BinningResult>(),
    };
    this.browse = new BrowseView(this.ctx, (methodId) => {
      void this.editInCreate(methodId);
    });
    this.compare = new CompareView(this.ctx);
    this.combine = new CombineView(this.ctx);
    this.create = new CreateView(this.ctx);
    this.panel = new ConfigPanel(this.ctx, {
      onBinCountChange: async () => {
        await this.browse.refreshDependents("bin_count");
        await this.refreshActive();
      },
      onIntervalSizeChange: async () => {
        await this.browse.refreshDependents("defined_interval_size");
        await this.refreshActive();
      },
      onPaletteChange: async () => {
        const { palettes } = await this.api.palettes([]);
        const palette = palettes.find(
          (p: PaletteWire) => p.name === this.store.state.paletteName,
        );
        if (palette) this.ctx.palette = palette;
        this.renderActive();
      },
    });

    await Promise.all([this.browse.load(), this.panel.load()]);
    this.renderShell();
    this.renderActive();
  }

  private renderShell(): void {
    this.root.textContent = "";
    const bar = document.createElement("nav");
    bar.className = "tab-bar";
    for (const tab of TABS) {
      const button = document.createElement("button");
      button.className = "tab-button";
      button.dataset.tab = tab;
      button.textContent = tab;
      button.addEventListener("click", () => void this.switchTab(tab));
      bar.appendChild(button);
    }
    this.root.appendChild(bar);

    const body = document.createElement("div");
    body.className = "app-body";
    const panelHost = document.createElement("aside");
    panelHost.className = "panel-host";
    this.panel.render(panelHost);
    body.appendChild(panelHost);
    this.viewHost = document.createElement("main");
    this.viewHost.className = "view-host";
    body.appendChild(this.viewHost);
    this.root.appendChild(body);
  }

  async switchTab(tab: Tab): Promise<void> {
    this.store.setTab(tab);
    if (tab === "compare") await this.compare.load();
    if (tab === "combine") await this.combine.load();
    if (tab === "create" && !this.createSeeded) {
      await this.create.seed();
      this.createSeeded = true;
    }
    this.renderActive();
  }

  private async editInCreate(methodId: string): Promise<void> {
    this.store.setTab("create");
    await this.create.seed(methodId);
    this.createSeeded = true;
    this.renderActive();
  }

  private async refreshActive(): Promise<void> {
    const tab = this.store.state.activeTab;
    if (tab === "compare") await this.compare.load();
    if (tab === "combine") await this.combine.load();
    this.renderActive();
  }

  renderActive(): void {
    if (!this.viewHost) return;
    const tab = this.store.state.activeTab;
    for (const button of this.root.querySelectorAll<HTMLButtonElement>(".tab-button")) {
      button.classList.toggle("active", button.dataset.tab === tab);
    }
    this.viewHost.textContent = "";
    const host = document.createElement("div");
    host.className = `view view-${tab}`;
    this.viewHost.appendChild(host);
    if (tab === "browse") this.browse.render(host);
    if (tab === "compare") this.compare.render(host);
    if (tab === "combine") this.combine.render(host);
    if (tab === "create") this.create.render(host);
  }
}
