import { swatchColour } from "./palette.js";
import type { Hint, Session } from "./types.js";

export interface ViewState {
  session: Session | null;
  selectedCell: number | null;
  hint: Hint | null;
  error: string | null;
}

export interface ViewHandlers {
  onCell(cell: number): void;
  onColour(colour: number): void;
  onHint(): void;
  onUndo(): void;
}

// The grid always shows the last server-confirmed state: render only from
// the session in `state`, never from local prediction.
export function render(root: HTMLElement, state: ViewState, handlers: ViewHandlers): void {
  root.textContent = "";
  const { session } = state;
  if (!session) return;

  const status = document.createElement("div");
  status.className = "status";
  const counter = document.createElement("span");
  counter.className = "move-counter";
  counter.textContent = `moves: ${session.moves_played}`;
  status.append(counter);

  const variant = document.createElement("span");
  variant.className = "variant";
  variant.textContent = session.variant === "fixed" ? "fixed (top-left pivot)" : "free";
  status.append(variant);

  if (state.hint) {
    const bound = document.createElement("span");
    bound.className = "bound";
    bound.textContent =
      state.hint.bound_kind === "exact"
        ? `optimal: ${state.hint.bound_value} left`
        : `at least ${state.hint.bound_value}`;
    status.append(bound);
  }
  root.append(status);

  if (session.flooded) {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = `Flooded in ${session.moves_played} moves`;
    root.append(banner);
  }

  if (state.error) {
    const err = document.createElement("div");
    err.className = "error";
    err.textContent = state.error;
    root.append(err);
  }

  const grid = document.createElement("div");
  grid.className = "board";
  grid.style.gridTemplateColumns = `repeat(${session.board.width}, 1.6rem)`;
  session.cells.forEach((colour, cell) => {
    const el = document.createElement("div");
    el.className = "cell";
    el.dataset.cell = String(cell);
    el.style.backgroundColor = swatchColour(colour);
    if (cell === state.selectedCell) el.classList.add("selected");
    if (state.hint?.suggested.vertex === cell) el.classList.add("hinted");
    if (session.variant === "free" && !session.flooded) {
      el.addEventListener("click", () => handlers.onCell(cell));
    }
    grid.append(el);
  });
  root.append(grid);

  const swatches = document.createElement("div");
  swatches.className = "swatches";
  for (let colour = 1; colour <= session.board.colours; colour += 1) {
    const btn = document.createElement("button");
    btn.className = "swatch";
    btn.dataset.colour = String(colour);
    btn.style.backgroundColor = swatchColour(colour);
    btn.title = `colour ${colour}`;
    if (state.hint?.suggested.colour === colour) btn.classList.add("hinted");
    // a swatch is live only when clicking it maps to a legal move request
    btn.disabled =
      session.flooded || (session.variant === "free" && state.selectedCell === null);
    btn.addEventListener("click", () => handlers.onColour(colour));
    swatches.append(btn);
  }
  root.append(swatches);

  const controls = document.createElement("div");
  controls.className = "controls";
  const hintBtn = document.createElement("button");
  hintBtn.className = "hint-button";
  hintBtn.textContent = "hint";
  hintBtn.disabled = session.flooded;
  hintBtn.addEventListener("click", () => handlers.onHint());
  const undoBtn = document.createElement("button");
  undoBtn.className = "undo-button";
  undoBtn.textContent = "undo";
  undoBtn.disabled = session.history.length === 0;
  undoBtn.addEventListener("click", () => handlers.onUndo());
  controls.append(hintBtn, undoBtn);
  root.append(controls);
}
