import type { Mark, Mode, NavTarget, SessionView } from "./api.js";
import { controlsFor } from "./state.js";

const MODES: Mode[] = ["H2H", "H2C", "C2H", "C2C"];
const MARKS: Mark[] = ["x", "o"];

// Counter rows: data-test id keeps the wire name, the label is for humans.
const COUNTERS: Array<[string, string]> = [
  ["xWinCount", "X wins"],
  ["oWinCount", "O wins"],
  ["drawCount", "Draws"],
  ["leadPlayer", "Lead"],
  ["nextPlayer", "Next"],
  ["movesCount", "Moves"],
];

export interface Page {
  root: HTMLElement;
  banner: HTMLElement;
  mode: HTMLElement;
  cells: HTMLButtonElement[];
  nav: Record<NavTarget, HTMLButtonElement>;
  cursor: HTMLElement;
  status: HTMLElement;
  counters: Record<string, HTMLElement>;
  setupForm: HTMLFormElement;
  setupMode: HTMLSelectElement;
  setupLead: HTMLSelectElement;
  setupApply: HTMLButtonElement;
  buttons: { setUp: HTMLButtonElement; initialize: HTMLButtonElement; move: HTMLButtonElement; stop: HTMLButtonElement };
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  testId?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (testId) node.setAttribute("data-test", testId);
  if (text !== undefined) node.textContent = text;
  return node;
}

/** Build the static two-column skeleton into `root` and hand back every
 * element the app needs to touch afterwards. */
export function buildPage(root: HTMLElement): Page {
  const doc = root.ownerDocument;
  root.textContent = "";

  const banner = el(doc, "div", "error");
  banner.className = "banner";
  banner.hidden = true;
  root.appendChild(banner);

  const layout = el(doc, "div");
  layout.className = "layout";
  root.appendChild(layout);

  // left column: title, mode, board, navigation, status
  const play = el(doc, "section");
  play.className = "play-column";
  layout.appendChild(play);
  play.appendChild(el(doc, "h1", "title", "Tic-tac-toe"));
  const mode = el(doc, "div", "mode");
  mode.className = "mode";
  play.appendChild(mode);

  const board = el(doc, "div", "board");
  board.className = "board";
  play.appendChild(board);
  const cells: HTMLButtonElement[] = [];
  for (let row = 0; row < 3; row += 1) {
    for (let col = 0; col < 3; col += 1) {
      const cell = el(doc, "button", `cell-${row}${col}`);
      cell.className = "cell";
      cell.type = "button";
      cell.dataset.row = String(row);
      cell.dataset.col = String(col);
      cells.push(cell);
      board.appendChild(cell);
    }
  }

  const navRow = el(doc, "div");
  navRow.className = "nav-row";
  play.appendChild(navRow);
  const navButton = (target: NavTarget, label: string) => {
    const button = el(doc, "button", `nav-${target}`, label);
    button.type = "button";
    navRow.appendChild(button);
    return button;
  };
  const first = navButton("first", "«");
  const prev = navButton("prev", "<");
  const cursor = el(doc, "span", "cursor");
  cursor.className = "cursor";
  navRow.appendChild(cursor);
  const next = navButton("next", ">");
  const last = navButton("last", "»");

  const status = el(doc, "div", "status");
  status.className = "status";
  play.appendChild(status);

  // right column: counters, setup form, action buttons
  const control = el(doc, "section");
  control.className = "control-column";
  layout.appendChild(control);

  const list = el(doc, "dl");
  list.className = "counters";
  control.appendChild(list);
  const counters: Record<string, HTMLElement> = {};
  for (const [testId, label] of COUNTERS) {
    list.appendChild(el(doc, "dt", undefined, label));
    const value = el(doc, "dd", testId);
    list.appendChild(value);
    counters[testId] = value;
  }

  const setupForm = el(doc, "form", "setupForm");
  setupForm.hidden = true;
  control.appendChild(setupForm);
  const setupMode = el(doc, "select", "setupMode");
  for (const value of MODES) {
    setupMode.appendChild(new Option(value, value));
  }
  setupForm.appendChild(setupMode);
  const setupLead = el(doc, "select", "setupLead");
  for (const value of MARKS) {
    setupLead.appendChild(new Option(value, value));
  }
  setupForm.appendChild(setupLead);
  const setupApply = el(doc, "button", "setupApply", "apply");
  setupApply.type = "submit";
  setupForm.appendChild(setupApply);

  const actions = el(doc, "div");
  actions.className = "actions";
  control.appendChild(actions);
  const actionButton = (name: string) => {
    const button = el(doc, "button", name, name);
    button.type = "button";
    actions.appendChild(button);
    return button;
  };
  const buttons = {
    setUp: actionButton("setUp"),
    initialize: actionButton("initialize"),
    move: actionButton("move"),
    stop: actionButton("stop"),
  };

  return {
    root,
    banner,
    mode,
    cells,
    nav: { first, prev, next, last },
    cursor,
    status,
    counters,
    setupForm,
    setupMode,
    setupLead,
    setupApply,
    buttons,
  };
}

/** Paint one server view. `pending` disables every input while a request is
 * in flight; enablement otherwise follows controlsFor exactly. */
export function renderView(page: Page, view: SessionView, pending: boolean): void {
  const controls = controlsFor(view);

  page.mode.textContent = view.mode;
  for (const cell of page.cells) {
    const index = Number(cell.dataset.row) * 3 + Number(cell.dataset.col);
    cell.textContent = view.board[index] ?? "";
    cell.disabled = pending || !controls.cells;
  }
  page.nav.first.disabled = pending || !controls.navBack;
  page.nav.prev.disabled = pending || !controls.navBack;
  page.nav.next.disabled = pending || !controls.navForward;
  page.nav.last.disabled = pending || !controls.navForward;
  page.cursor.textContent = String(view.cursor);
  page.status.textContent = view.status;

  const values: Record<string, string> = {
    xWinCount: String(view.stats.xWinCount),
    oWinCount: String(view.stats.oWinCount),
    drawCount: String(view.stats.drawCount),
    leadPlayer: view.leadPlayer,
    nextPlayer: view.nextPlayer ?? "-",
    movesCount: String(view.movesCount),
  };
  for (const [key, value] of Object.entries(values)) {
    const slot = page.counters[key];
    if (slot) slot.textContent = value;
  }

  page.buttons.move.disabled = pending || !controls.move;
  page.buttons.setUp.disabled = pending;
  page.buttons.initialize.disabled = pending;
  page.buttons.stop.disabled = pending;
  page.setupApply.disabled = pending;
}

export function renderError(page: Page, text: string | null): void {
  page.banner.textContent = text ?? "";
  page.banner.hidden = text === null;
}
