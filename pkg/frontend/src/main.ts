import { ApiClient } from "./api.js";
import { App } from "./app.js";

const SERVICE_URL =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8787";

window.addEventListener("DOMContentLoaded", () => {
  const root = document.getElementById("app");
  if (!root) return;
  const app = new App(new ApiClient(SERVICE_URL));
  void app.init(root).catch((error) => {
    root.textContent = `failed to reach the binx service at ${SERVICE_URL}: ${error}`;
  });
});
