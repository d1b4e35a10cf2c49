// Colour-blind-safe eight-swatch palette (Wong), indexed by 1-based colour id.
export const PALETTE = [
  "#e69f00",
  "#56b4e9",
  "#009e73",
  "#f0e442",
  "#0072b2",
  "#d55e00",
  "#cc79a7",
  "#999999",
];

export function swatchColour(colour: number): string {
  return PALETTE[(colour - 1) % PALETTE.length];
}

// Deterministic 32-bit PRNG for client-side board generation from a seed.
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function randomCells(height: number, width: number, colours: number, seed: number): number[] {
  const next = mulberry32(seed);
  return Array.from({ length: height * width }, () => 1 + Math.floor(next() * colours));
}
