/** Export dialog: raster at 1x/2x/4x, SVG passthrough, breaks/sizes/stub copy. */

import { type AppContext, specFor } from "../context.js";
import { el } from "../render.js";
import type { BinningResult } from "../types.js";

export const BASE_WIDTH = 640;
export const BASE_HEIGHT = 420;
export const PNG_SCALES = [1, 2, 4] as const;

/** Pixel dimensions for a raster export; scales linearly with the factor. */
export function pngDimensions(scale: number): { width: number; height: number } {
  return { width: BASE_WIDTH * scale, height: BASE_HEIGHT * scale };
}

export function openExportDialog(
  ctx: AppContext,
  methodId: string,
  result: BinningResult,
): HTMLElement {
  const dialog = el("div", "export-dialog");
  dialog.appendChild(el("h3", undefined, `Export ${methodId}`));

  const rasterRow = el("div", "export-raster");
  for (const scale of PNG_SCALES) {
    const button = el("button", undefined, `PNG ${scale}x`);
    button.dataset.scale = String(scale);
    button.addEventListener("click", () => void downloadPng(ctx, methodId, scale));
    rasterRow.appendChild(button);
  }
  dialog.appendChild(rasterRow);

  const svgButton = el("button", undefined, "SVG legend");
  svgButton.dataset.action = "export-svg";
  svgButton.addEventListener("click", async () => {
    const response = await ctx.api.exportTarget(
      ctx.store.state.datasetId,
      specFor(ctx, methodId),
      "legend_svg",
      ctx.store.state.paletteName,
      ctx.store.state.reversePalette,
    );
    triggerDownload(await response.text(), `${methodId}-legend.svg`, "image/svg+xml");
  });
  dialog.appendChild(svgButton);

  const copyBreaks = el("button", undefined, "copy breaks");
  copyBreaks.dataset.action = "copy-breaks";
  copyBreaks.dataset.payload = JSON.stringify({ breaks: result.extents });
  copyBreaks.addEventListener("click", () =>
    copyText(JSON.stringify({ breaks: result.extents })),
  );
  dialog.appendChild(copyBreaks);

  const copySizes = el("button", undefined, "copy sizes");
  copySizes.dataset.action = "copy-sizes";
  copySizes.dataset.payload = JSON.stringify({ binSizes: result.binSizes });
  copySizes.addEventListener("click", () =>
    copyText(JSON.stringify({ binSizes: result.binSizes })),
  );
  dialog.appendChild(copySizes);

  const copyStub = el("button", undefined, "copy code stub");
  copyStub.dataset.action = "copy-stub";
  copyStub.addEventListener("click", async () => {
    const response = await ctx.api.exportTarget(
      ctx.store.state.datasetId,
      specFor(ctx, methodId),
      "code_stub",
      ctx.store.state.paletteName,
      ctx.store.state.reversePalette,
    );
    copyText(await response.text());
  });
  dialog.appendChild(copyStub);

  const close = el("button", undefined, "close");
  close.addEventListener("click", () => dialog.remove());
  dialog.appendChild(close);

  document.body.appendChild(dialog);
  return dialog;
}

async function downloadPng(ctx: AppContext, methodId: string, scale: number): Promise<void> {
  const card = document.querySelector(`[data-method-id="${methodId}"] svg`);
  if (!card || typeof document.createElement("canvas").getContext !== "function") return;
  const { width, height } = pngDimensions(scale);
  const canvas = document.createElement("canvas");
  canvas.width = width;
  canvas.height = height;
  const context = canvas.getContext("2d");
  if (!context) return;
  const blob = new Blob([new XMLSerializer().serializeToString(card)], {
    type: "image/svg+xml",
  });
  const url = URL.createObjectURL(blob);
  const image = new Image();
  await new Promise((resolve, reject) => {
    image.onload = resolve;
    image.onerror = reject;
    image.src = url;
  });
  context.drawImage(image, 0, 0, width, height);
  URL.revokeObjectURL(url);
  triggerDownload(canvas.toDataURL("image/png"), `${methodId}@${scale}x.png`, null);
}

function triggerDownload(content: string, filename: string, mime: string | null): void {
  const anchor = document.createElement("a");
  anchor.href = mime ? `data:${mime};charset=utf-8,${encodeURIComponent(content)}` : content;
  anchor.download = filename;
  anchor.click();
}

function copyText(text: string): void {
  if (navigator.clipboard?.writeText) {
    void navigator.clipboard.writeText(text);
  }
}
