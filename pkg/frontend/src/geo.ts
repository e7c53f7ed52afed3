/** Minimal GeoJSON-to-SVG projection: fit the collection's bounding box. */

import type { FeatureCollection, GeoFeature } from "./types.js";

type Ring = [number, number][];

function rings(feature: GeoFeature): Ring[] {
  const geometry = feature.geometry;
  if (geometry.type === "Polygon") {
    return geometry.coordinates as Ring[];
  }
  return (geometry.coordinates as Ring[][]).flat();
}

export interface Projection {
  x(lon: number): number;
  y(lat: number): number;
}

export function fitProjection(
  collection: FeatureCollection,
  width: number,
  height: number,
  pad = 4,
): Projection {
  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const feature of collection.features) {
    for (const ring of rings(feature)) {
      for (const [lon, lat] of ring) {
        if (lon < minX) minX = lon;
        if (lon > maxX) maxX = lon;
        if (lat < minY) minY = lat;
        if (lat > maxY) maxY = lat;
      }
    }
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * pad) / spanX, (height - 2 * pad) / spanY);
  return {
    x: (lon) => pad + (lon - minX) * scale,
    y: (lat) => height - pad - (lat - minY) * scale,
  };
}

export function featurePath(feature: GeoFeature, projection: Projection): string {
  const parts: string[] = [];
  for (const ring of rings(feature)) {
    const coords = ring.map(
      ([lon, lat]) => `${projection.x(lon).toFixed(2)},${projection.y(lat).toFixed(2)}`,
    );
    parts.push(`M${coords.join("L")}Z`);
  }
  return parts.join("");
}

export interface MapOptions {
  width?: number;
  height?: number;
  fillFor(feature: GeoFeature): string;
  opacityFor?(feature: GeoFeature): number;
  tooltipFor?(feature: GeoFeature): string;
  onClickFeature?(feature: GeoFeature): void;
}

/** Render a choropleth as an inline SVG with one path per feature. */
export function renderMap(collection: FeatureCollection, options: MapOptions): SVGSVGElement {
  const width = options.width ?? 300;
  const height = options.height ?? 200;
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "choropleth");
  const projection = fitProjection(collection, width, height);
  for (const feature of collection.features) {
    const path = document.createElementNS("http://www.w3.org/2000/svg", "path");
    path.setAttribute("d", featurePath(feature, projection));
    path.setAttribute("fill", options.fillFor(feature));
    if (options.opacityFor) {
      path.setAttribute("fill-opacity", String(options.opacityFor(feature)));
    }
    path.setAttribute("stroke", "#ffffff");
    path.setAttribute("stroke-width", "0.6");
    path.dataset.featureId = feature.properties.__id;
    if (options.tooltipFor) {
      const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
      title.textContent = options.tooltipFor(feature);
      path.appendChild(title);
    }
    if (options.onClickFeature) {
      path.addEventListener("click", () => options.onClickFeature!(feature));
    }
    svg.appendChild(path);
  }
  return svg;
}
