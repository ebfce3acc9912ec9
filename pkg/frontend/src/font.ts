/** Built-in 5x7 bitmap font for PNG text.
 *
 * Glyphs are declared as visual rows ('X' = pixel) so the shapes can be
 * reviewed directly in source.  Characters without a glyph render as a
 * hollow box, making missing coverage obvious rather than silent.
 */

export const GLYPH_W = 5;
export const GLYPH_H = 7;
export const ADVANCE = 6;

const G: Record<string, string[]> = {
  " ": ["     ", "     ", "     ", "     ", "     ", "     ", "     "],
  A: [" XXX ", "X   X", "X   X", "XXXXX", "X   X", "X   X", "X   X"],
  B: ["XXXX ", "X   X", "X   X", "XXXX ", "X   X", "X   X", "XXXX "],
  C: [" XXX ", "X   X", "X    ", "X    ", "X    ", "X   X", " XXX "],
  D: ["XXXX ", "X   X", "X   X", "X   X", "X   X", "X   X", "XXXX "],
  E: ["XXXXX", "X    ", "X    ", "XXXX ", "X    ", "X    ", "XXXXX"],
  F: ["XXXXX", "X    ", "X    ", "XXXX ", "X    ", "X    ", "X    "],
  G: [" XXX ", "X   X", "X    ", "X XXX", "X   X", "X   X", " XXX "],
  H: ["X   X", "X   X", "X   X", "XXXXX", "X   X", "X   X", "X   X"],
  I: [" XXX ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  J: ["  XXX", "   X ", "   X ", "   X ", "   X ", "X  X ", " XX  "],
  K: ["X   X", "X  X ", "X X  ", "XX   ", "X X  ", "X  X ", "X   X"],
  L: ["X    ", "X    ", "X    ", "X    ", "X    ", "X    ", "XXXXX"],
  M: ["X   X", "XX XX", "X X X", "X X X", "X   X", "X   X", "X   X"],
  N: ["X   X", "XX  X", "X X X", "X  XX", "X   X", "X   X", "X   X"],
  O: [" XXX ", "X   X", "X   X", "X   X", "X   X", "X   X", " XXX "],
  P: ["XXXX ", "X   X", "X   X", "XXXX ", "X    ", "X    ", "X    "],
  Q: [" XXX ", "X   X", "X   X", "X   X", "X X X", "X  X ", " XX X"],
  R: ["XXXX ", "X   X", "X   X", "XXXX ", "X X  ", "X  X ", "X   X"],
  S: [" XXXX", "X    ", "X    ", " XXX ", "    X", "    X", "XXXX "],
  T: ["XXXXX", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  "],
  U: ["X   X", "X   X", "X   X", "X   X", "X   X", "X   X", " XXX "],
  V: ["X   X", "X   X", "X   X", "X   X", "X   X", " X X ", "  X  "],
  W: ["X   X", "X   X", "X   X", "X X X", "X X X", "XX XX", "X   X"],
  X: ["X   X", "X   X", " X X ", "  X  ", " X X ", "X   X", "X   X"],
  Y: ["X   X", "X   X", " X X ", "  X  ", "  X  ", "  X  ", "  X  "],
  Z: ["XXXXX", "    X", "   X ", "  X  ", " X   ", "X    ", "XXXXX"],
  a: ["     ", "     ", " XXX ", "    X", " XXXX", "X   X", " XXXX"],
  b: ["X    ", "X    ", "XXXX ", "X   X", "X   X", "X   X", "XXXX "],
  c: ["     ", "     ", " XXXX", "X    ", "X    ", "X    ", " XXXX"],
  d: ["    X", "    X", " XXXX", "X   X", "X   X", "X   X", " XXXX"],
  e: ["     ", "     ", " XXX ", "X   X", "XXXXX", "X    ", " XXX "],
  f: ["  XX ", " X   ", "XXXX ", " X   ", " X   ", " X   ", " X   "],
  g: ["     ", " XXX ", "X   X", "X   X", " XXXX", "    X", " XXX "],
  h: ["X    ", "X    ", "XXXX ", "X   X", "X   X", "X   X", "X   X"],
  i: ["  X  ", "     ", " XX  ", "  X  ", "  X  ", "  X  ", " XXX "],
  j: ["   X ", "     ", "  XX ", "   X ", "   X ", "X  X ", " XX  "],
  k: ["X    ", "X    ", "X  X ", "X X  ", "XX   ", "X X  ", "X  X "],
  l: [" XX  ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  m: ["     ", "     ", "XX X ", "X X X", "X X X", "X X X", "X X X"],
  n: ["     ", "     ", "XXXX ", "X   X", "X   X", "X   X", "X   X"],
  o: ["     ", "     ", " XXX ", "X   X", "X   X", "X   X", " XXX "],
  p: ["     ", "     ", "XXXX ", "X   X", "XXXX ", "X    ", "X    "],
  q: ["     ", "     ", " XXXX", "X   X", " XXXX", "    X", "    X"],
  r: ["     ", "     ", "X XX ", "XX   ", "X    ", "X    ", "X    "],
  s: ["     ", "     ", " XXXX", "X    ", " XXX ", "    X", "XXXX "],
  t: [" X   ", " X   ", "XXXX ", " X   ", " X   ", " X   ", "  XX "],
  u: ["     ", "     ", "X   X", "X   X", "X   X", "X   X", " XXXX"],
  v: ["     ", "     ", "X   X", "X   X", "X   X", " X X ", "  X  "],
  w: ["     ", "     ", "X   X", "X   X", "X X X", "X X X", " X X "],
  x: ["     ", "     ", "X   X", " X X ", "  X  ", " X X ", "X   X"],
  y: ["     ", "     ", "X   X", "X   X", " XXXX", "    X", " XXX "],
  z: ["     ", "     ", "XXXXX", "   X ", "  X  ", " X   ", "XXXXX"],
  "0": [" XXX ", "X   X", "X  XX", "X X X", "XX  X", "X   X", " XXX "],
  "1": ["  X  ", " XX  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  "2": [" XXX ", "X   X", "    X", "   X ", "  X  ", " X   ", "XXXXX"],
  "3": ["XXXXX", "   X ", "  X  ", "   X ", "    X", "X   X", " XXX "],
  "4": ["   X ", "  XX ", " X X ", "X  X ", "XXXXX", "   X ", "   X "],
  "5": ["XXXXX", "X    ", "XXXX ", "    X", "    X", "X   X", " XXX "],
  "6": ["  XX ", " X   ", "X    ", "XXXX ", "X   X", "X   X", " XXX "],
  "7": ["XXXXX", "    X", "   X ", "  X  ", " X   ", " X   ", " X   "],
  "8": [" XXX ", "X   X", "X   X", " XXX ", "X   X", "X   X", " XXX "],
  "9": [" XXX ", "X   X", "X   X", " XXXX", "    X", "   X ", " XX  "],
  ".": ["     ", "     ", "     ", "     ", "     ", " XX  ", " XX  "],
  ",": ["     ", "     ", "     ", "     ", "  XX ", "  X  ", " X   "],
  "-": ["     ", "     ", "     ", "XXXXX", "     ", "     ", "     "],
  "+": ["     ", "  X  ", "  X  ", "XXXXX", "  X  ", "  X  ", "     "],
  "(": ["   X ", "  X  ", " X   ", " X   ", " X   ", "  X  ", "   X "],
  ")": [" X   ", "  X  ", "   X ", "   X ", "   X ", "  X  ", " X   "],
  "/": ["    X", "    X", "   X ", "  X  ", " X   ", "X    ", "X    "],
  "=": ["     ", "     ", "XXXXX", "     ", "XXXXX", "     ", "     "],
  ":": ["     ", " XX  ", " XX  ", "     ", " XX  ", " XX  ", "     "],
  _: ["     ", "     ", "     ", "     ", "     ", "     ", "XXXXX"],
  "%": ["XX  X", "XX  X", "   X ", "  X  ", " X   ", "X  XX", "X  XX"],
  "^": ["  X  ", " X X ", "X   X", "     ", "     ", "     ", "     "],
  "'": ["  X  ", "  X  ", "     ", "     ", "     ", "     ", "     "],
};

const FALLBACK = ["XXXXX", "X   X", "X   X", "X   X", "X   X", "X   X", "XXXXX"];

export function glyph(ch: string): string[] {
  return G[ch] ?? FALLBACK;
}
