import type { Analysis, BoardJson, Hint, Session } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      detail = (await res.json()).detail ?? detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return res.json() as Promise<T>;
}

export const api = {
  createGame(board: BoardJson, variant: "free" | "fixed", pivot?: number): Promise<Session> {
    const body: Record<string, unknown> = { board, variant };
    if (pivot !== undefined) body.pivot = pivot;
    return request("/games", { method: "POST", body: JSON.stringify(body) });
  },

  getGame(id: string): Promise<Session> {
    return request(`/games/${id}`);
  },

  playMove(id: string, vertex: number | null, colour: number): Promise<Session> {
    return request(`/games/${id}/moves`, {
      method: "POST",
      body: JSON.stringify({ vertex, colour }),
    });
  },

  undo(id: string): Promise<Session> {
    return request(`/games/${id}/undo`, { method: "POST" });
  },

  hint(id: string): Promise<Hint> {
    return request(`/games/${id}/hint`);
  },

  analysis(id: string): Promise<Analysis> {
    return request(`/games/${id}/analysis`);
  },
};
