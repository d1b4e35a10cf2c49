// Wire types for the game service API. Colours are 1-based on the wire;
// cell ids are 0-based row-major indices.

export interface BoardJson {
  height: number;
  width: number;
  colours: number;
  cells: number[];
}

export interface MoveJson {
  vertex: number | null;
  colour: number;
}

export interface Session {
  id: string;
  variant: "free" | "fixed";
  pivot: number | null;
  board: BoardJson;
  cells: number[];
  history: MoveJson[];
  moves_played: number;
  flooded: boolean;
  created_at: string;
  updated_at: string;
}

export interface Hint {
  suggested: MoveJson;
  bound_kind: "exact" | "lower";
  bound_value: number;
}

export interface Analysis {
  region_count: number;
  colours_present: number[];
  flooded: boolean;
  area_lower_bound: number;
  link_lower_bound: number | null;
  optimum: number | null;
}
