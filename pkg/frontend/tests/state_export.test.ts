import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { initialState, Store } from "../src/state.js";
import { pngDimensions, BASE_HEIGHT, BASE_WIDTH } from "../src/views/exportDialog.js";
import { bootApp, flush } from "./helpers.js";
import { FIXTURES, installFetchStub, type FetchStub } from "./stubApi.js";

describe("view state", () => {
  it("card order must stay a permutation of the known methods", () => {
    const store = new Store({ ...initialState(), cardOrder: ["a", "b", "c"] });
    store.moveCard("c", 0);
    expect(store.state.cardOrder).toEqual(["c", "a", "b"]);
    expect(() => store.setCardOrder(["a", "b"])).toThrow(/permutation/);
    expect(() => store.setCardOrder(["a", "b", "b"])).toThrow(/permutation/);
  });

  it("paint selection is only legal in the create tab", () => {
    const store = new Store();
    expect(() => store.update({ paintSelectedBin: 2 })).toThrow(/create/);
    store.setTab("create");
    store.update({ paintSelectedBin: 2 });
    expect(store.state.paintSelectedBin).toBe(2);
    store.setTab("browse");
    expect(store.state.paintSelectedBin).toBeNull();
    expect(store.state.pendingConstraints).toEqual([]);
  });

  it("generation counters discard stale responses", () => {
    const store = new Store();
    const first = store.nextGeneration("browse");
    const second = store.nextGeneration("browse");
    expect(store.isCurrent("browse", first)).toBe(false);
    expect(store.isCurrent("browse", second)).toBe(true);
  });
});

describe("export dialog", () => {
  let stub: FetchStub;

  beforeEach(() => {
    document.body.innerHTML = "";
    stub = installFetchStub();
  });

  afterEach(() => stub.restore());

  it("png dimensions scale linearly", () => {
    expect(pngDimensions(1)).toEqual({ width: BASE_WIDTH, height: BASE_HEIGHT });
    expect(pngDimensions(2)).toEqual({ width: BASE_WIDTH * 2, height: BASE_HEIGHT * 2 });
    expect(pngDimensions(4)).toEqual({ width: BASE_WIDTH * 4, height: BASE_HEIGHT * 4 });
  });

  it("copied breaks parse as valid JSON matching the result", async () => {
    await bootApp(6);
    document
      .querySelector<HTMLButtonElement>(
        '[data-method-id="natural_breaks"] [data-action="export"]',
      )!
      .click();
    await flush();
    const button = document.querySelector<HTMLButtonElement>(
      '.export-dialog [data-action="copy-breaks"]',
    )!;
    const payload = JSON.parse(button.dataset.payload!);
    expect(payload.breaks).toEqual(FIXTURES.binAll6.natural_breaks.extents);
  });

  it("offers raster export at 1x, 2x and 4x", async () => {
    await bootApp(6);
    document
      .querySelector<HTMLButtonElement>(
        '[data-method-id="quantile"] [data-action="export"]',
      )!
      .click();
    await flush();
    const scales = Array.from(
      document.querySelectorAll<HTMLButtonElement>(".export-raster button"),
    ).map((b) => b.dataset.scale);
    expect(scales).toEqual(["1", "2", "4"]);
  });

  it("svg export passes the service response through untouched", async () => {
    await bootApp(6);
    document
      .querySelector<HTMLButtonElement>(
        '[data-method-id="quantile"] [data-action="export"]',
      )!
      .click();
    await flush();
    let captured: string | null = null;
    const realCreate = document.createElement.bind(document);
    const spy = (tag: string) => {
      const node = realCreate(tag as any);
      if (tag === "a") {
        (node as HTMLAnchorElement).click = function (this: HTMLAnchorElement) {
          captured = decodeURIComponent(this.href.split(",", 2)[1]);
        };
      }
      return node;
    };
    // capture the generated download anchor
    (document as any).createElement = spy;
    document
      .querySelector<HTMLButtonElement>('[data-action="export-svg"]')!
      .click();
    await flush();
    (document as any).createElement = realCreate;
    expect(captured).toBe(FIXTURES.legendSvg);
  });
});
