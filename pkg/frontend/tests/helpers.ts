import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { initialState, Store } from "../src/state.js";

export async function bootApp(binCount = 5): Promise<App> {
  const store = new Store({
    ...initialState(),
    datasetId: "micro",
    attribute: "life_expectancy",
    binCount,
  });
  const app = new App(new ApiClient(""), store);
  const root = document.createElement("div");
  document.body.appendChild(root);
  await app.init(root);
  return app;
}

export function visibleCards(): HTMLElement[] {
  return Array.from(document.querySelectorAll<HTMLElement>(".card"));
}

export async function flush(): Promise<void> {
  // settle queued promise callbacks from event handlers
  for (let i = 0; i < 8; i++) await Promise.resolve();
  await new Promise((resolve) => setTimeout(resolve, 0));
}
