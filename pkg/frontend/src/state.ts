import type { SessionView } from "./api.js";

export type Controller = "human" | "computer";

/** Which controls accept input for a given server view.
 *
 * Everything here is derived from the view alone; the DOM layer applies it
 * verbatim (plus a global "request in flight" override).
 */
export interface Controls {
  cells: boolean;
  navBack: boolean;
  navForward: boolean;
  move: boolean;
}

/** Controller of the mark that moves next, or null on a finished game.
 * The mode string's first letter rules the lead seat, the last letter the
 * other one. */
export function moverController(view: SessionView): Controller | null {
  if (view.nextPlayer === null) {
    return null;
  }
  const letter = view.nextPlayer === view.leadPlayer ? view.mode[0] : view.mode[view.mode.length - 1];
  return letter === "H" ? "human" : "computer";
}

export function controlsFor(view: SessionView): Controls {
  const mover = moverController(view);
  const live = view.result === "c";
  return {
    cells: live && view.cursor === view.movesCount && mover === "human",
    navBack: view.cursor > 0,
    navForward: view.cursor < view.movesCount,
    move: live && mover === "computer",
  };
}
