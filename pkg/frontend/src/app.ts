import type { Client, Mark, Mode, NavTarget, SessionView } from "./api.js";
import { ApiError } from "./api.js";
import { moverController } from "./state.js";
import { buildPage, renderError, renderView, type Page } from "./render.js";

export interface AppOptions {
  root: HTMLElement;
  client: Client;
  mode?: Mode;
  leadPlayer?: Mark;
  /** Called after every repaint from a server view; tests use it to check
   * that nothing but server boards ever reaches the screen. */
  onViewRendered?: (view: SessionView) => void;
}

export interface App {
  start(): Promise<void>;
  readonly page: Page;
  readonly view: SessionView | null;
  readonly pending: boolean;
}

export function createApp(options: AppOptions): App {
  const { client, onViewRendered } = options;
  const page = buildPage(options.root);

  let view: SessionView | null = null;
  let pending = false;

  const show = (next: SessionView) => {
    view = next;
    renderView(page, next, pending);
    onViewRendered?.(next);
  };

  // Single-flight: every server interaction funnels through here, and new
  // input is dropped until the previous exchange settles.
  const perform = async (task: (current: SessionView) => Promise<void>) => {
    if (pending || view === null) {
      return;
    }
    pending = true;
    renderView(page, view, true);
    renderError(page, null);
    try {
      await task(view);
    } catch (err) {
      renderError(page, err instanceof ApiError ? err.message : String(err));
    } finally {
      pending = false;
      if (view) renderView(page, view, false);
    }
  };

  const onCell = (row: number, col: number) =>
    perform(async (current) => {
      const afterHuman = await client.playMove(current.id, row, col);
      show(afterHuman);
      if (afterHuman.result === "c" && moverController(afterHuman) === "computer") {
        show(await client.aiMove(afterHuman.id));
      }
    });

  for (const cell of page.cells) {
    cell.addEventListener("click", () => {
      void onCell(Number(cell.dataset.row), Number(cell.dataset.col));
    });
  }

  const navTargets: NavTarget[] = ["first", "prev", "next", "last"];
  for (const target of navTargets) {
    page.nav[target].addEventListener("click", () => {
      void perform(async (current) => show(await client.navigate(current.id, target)));
    });
  }

  page.buttons.move.addEventListener("click", () => {
    void perform(async (current) => show(await client.aiMove(current.id)));
  });

  page.buttons.initialize.addEventListener("click", () => {
    void perform(async (current) => show(await client.initialize(current.id)));
  });

  page.buttons.stop.addEventListener("click", () => {
    void perform(async (current) => {
      await client.stop(current.id);
      show(await client.getSession(current.id));
    });
  });

  page.buttons.setUp.addEventListener("click", () => {
    if (pending || view === null) {
      return;
    }
    if (page.setupForm.hidden) {
      page.setupMode.value = view.mode;
      page.setupLead.value = view.leadPlayer;
    }
    page.setupForm.hidden = !page.setupForm.hidden;
  });

  page.setupForm.addEventListener("submit", (event) => {
    event.preventDefault();
    void perform(async (current) => {
      const mode = page.setupMode.value as Mode;
      const lead = page.setupLead.value as Mark;
      show(await client.setUp(current.id, mode, lead));
      page.setupForm.hidden = true;
    });
  });

  return {
    async start() {
      pending = true;
      try {
        show(await client.createSession(options.mode ?? "H2H", options.leadPlayer ?? "x"));
      } catch (err) {
        renderError(page, err instanceof ApiError ? err.message : String(err));
      } finally {
        pending = false;
        if (view) renderView(page, view, false);
      }
    },
    page,
    get view() {
      return view;
    },
    get pending() {
      return pending;
    },
  };
}
