import { api, ApiError } from "./api.js";
import { randomCells } from "./palette.js";
import type { BoardJson, Session } from "./types.js";
import { render, ViewState } from "./view.js";

export interface NewGameParams {
  height: number;
  width: number;
  colours: number;
  seed: number;
  variant: "free" | "fixed";
  cells?: number[]; // explicit board; otherwise generated from the seed
}

export class App {
  private state: ViewState = { session: null, selectedCell: null, hint: null, error: null };
  private queue: Promise<void> = Promise.resolve();

  constructor(private root: HTMLElement) {}

  get session(): Session | null {
    return this.state.session;
  }

  async newGame(params: NewGameParams): Promise<void> {
    const board: BoardJson = {
      height: params.height,
      width: params.width,
      colours: params.colours,
      cells: params.cells ?? randomCells(params.height, params.width, params.colours, params.seed),
    };
    const session = await api.createGame(board, params.variant);
    this.state = { session, selectedCell: null, hint: null, error: null };
    this.draw();
  }

  /** Serialise mutations: one request in flight, later clicks queue up. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(task, task);
    return this.queue;
  }

  private draw(): void {
    render(this.root, this.state, {
      onCell: (cell) => this.selectCell(cell),
      onColour: (colour) => void this.submitMove(colour),
      onHint: () => void this.showHint(),
      onUndo: () => void this.undo(),
    });
  }

  private selectCell(cell: number): void {
    this.state = { ...this.state, selectedCell: cell, error: null };
    this.draw();
  }

  submitMove(colour: number): Promise<void> {
    return this.enqueue(async () => {
      const session = this.state.session;
      if (!session || session.flooded) return;
      const vertex = session.variant === "free" ? this.state.selectedCell : null;
      if (session.variant === "free" && vertex === null) {
        this.state = { ...this.state, error: "pick a cell first" };
        this.draw();
        return;
      }
      try {
        const updated = await api.playMove(session.id, vertex, colour);
        this.state = { session: updated, selectedCell: null, hint: null, error: null };
      } catch (err) {
        this.state = { ...this.state, error: this.describe(err) };
      }
      this.draw();
    });
  }

  showHint(): Promise<void> {
    return this.enqueue(async () => {
      const session = this.state.session;
      if (!session || session.flooded) return;
      try {
        const hint = await api.hint(session.id);
        this.state = { ...this.state, hint, error: null };
      } catch (err) {
        this.state = { ...this.state, error: this.describe(err) };
      }
      this.draw();
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      const session = this.state.session;
      if (!session) return;
      try {
        const updated = await api.undo(session.id);
        this.state = { session: updated, selectedCell: null, hint: null, error: null };
      } catch (err) {
        this.state = { ...this.state, error: this.describe(err) };
      }
      this.draw();
    });
  }

  /** Resolves once every queued mutation has been answered and rendered. */
  settled(): Promise<void> {
    return this.queue;
  }

  private describe(err: unknown): string {
    if (err instanceof ApiError) return err.message;
    return String(err);
  }
}

export function installForm(form: HTMLFormElement, app: App): void {
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const data = new FormData(form);
    void app.newGame({
      height: Number(data.get("height") ?? 3),
      width: Number(data.get("width") ?? 6),
      colours: Number(data.get("colours") ?? 3),
      seed: Number(data.get("seed") ?? 0),
      variant: (data.get("variant") as "free" | "fixed") ?? "free",
    });
  });
}
