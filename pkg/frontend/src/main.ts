import { Client } from "./api.js";
import { createApp } from "./app.js";

// Same-origin by default (the service hosts dist/); override by defining
// TICTACTOE_API_BASE before this module loads.
const base = (globalThis as { TICTACTOE_API_BASE?: string }).TICTACTOE_API_BASE ?? "";

const root = document.getElementById("app");
if (root) {
  void createApp({ root, client: new Client(base) }).start();
}
