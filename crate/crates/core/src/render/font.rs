//! Embedded 5x7 bitmap font and text stamping.
//!
//! Glyphs are compiled into the binary so rendering never consults
//! system fonts; identical inputs give identical pixels on every
//! machine. Family tokens are stylistic variants of the same face:
//! `Sans` plain, `SansBold` thickened, `Mono` with wider advance.

use super::raster::{Canvas, Rgb};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

pub const GLYPH_W: usize = 5;
pub const GLYPH_H: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FontFamily {
    Sans,
    SansBold,
    Mono,
}

impl FontFamily {
    /// Horizontal advance per character in glyph columns.
    fn advance(self) -> usize {
        match self {
            FontFamily::Sans | FontFamily::SansBold => GLYPH_W + 1,
            FontFamily::Mono => GLYPH_W + 2,
        }
    }

    fn bold(self) -> bool {
        self == FontFamily::SansBold
    }
}

/// Pixel width of a string at the given integer scale.
pub fn text_width(text: &str, family: FontFamily, scale: usize) -> usize {
    let n = text.chars().count();
    if n == 0 {
        return 0;
    }
    // No trailing inter-character gap.
    (n * family.advance() - (family.advance() - GLYPH_W)) * scale
}

pub fn text_height(scale: usize) -> usize {
    GLYPH_H * scale
}

/// Stamps `text` with its top-left corner at (x, y).
pub fn draw_text(
    canvas: &mut Canvas,
    x: i64,
    y: i64,
    text: &str,
    family: FontFamily,
    scale: usize,
    color: Rgb,
) {
    let mut cx = x;
    for ch in text.chars() {
        draw_glyph(canvas, cx, y, ch, scale, color, false);
        if family.bold() {
            draw_glyph(canvas, cx + 1, y, ch, scale, color, false);
        }
        cx += (family.advance() * scale) as i64;
    }
}

/// Stamps `text` rotated 90° counter-clockwise (reads bottom-to-top),
/// with (x, y) the top-left corner of the rotated bounding box.
pub fn draw_text_rot90(
    canvas: &mut Canvas,
    x: i64,
    y: i64,
    text: &str,
    family: FontFamily,
    scale: usize,
    color: Rgb,
) {
    let total = text_width(text, family, scale) as i64;
    let mut along = 0i64;
    for ch in text.chars() {
        let cy = y + total - along - (GLYPH_W * scale) as i64;
        draw_glyph(canvas, x, cy, ch, scale, color, true);
        if family.bold() {
            draw_glyph(canvas, x, cy - 1, ch, scale, color, true);
        }
        along += (family.advance() * scale) as i64;
    }
}

fn draw_glyph(canvas: &mut Canvas, x: i64, y: i64, ch: char, scale: usize, color: Rgb, rot: bool) {
    let rows = glyph_rows(ch);
    for (r, mask) in rows.iter().enumerate() {
        for c in 0..GLYPH_W {
            if mask & (1 << (GLYPH_W - 1 - c)) != 0 {
                // Rotated 90° CCW: glyph row r becomes column r, glyph
                // column c counts up from the bottom.
                let (gx, gy) = if rot {
                    (r, GLYPH_W - 1 - c)
                } else {
                    (c, r)
                };
                for sy in 0..scale {
                    for sx in 0..scale {
                        canvas.set(
                            x + (gx * scale + sx) as i64,
                            y + (gy * scale + sy) as i64,
                            color,
                        );
                    }
                }
            }
        }
    }
}

fn glyph_rows(ch: char) -> [u8; GLYPH_H] {
    let table = glyph_table();
    let idx = ch as usize;
    if (0x20..0x7f).contains(&idx) {
        table[idx - 0x20]
    } else {
        // Unknown characters render as a hollow box.
        table[0x7f - 0x20]
    }
}

fn glyph_table() -> &'static [[u8; GLYPH_H]; 96] {
    static TABLE: OnceLock<[[u8; GLYPH_H]; 96]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [[0u8; GLYPH_H]; 96];
        for (i, pat) in GLYPHS.iter().enumerate() {
            debug_assert_eq!(pat.len(), GLYPH_H * GLYPH_W, "glyph {i} malformed");
            for (r, row) in out[i].iter_mut().enumerate() {
                for c in 0..GLYPH_W {
                    if pat.as_bytes()[r * GLYPH_W + c] == b'#' {
                        *row |= 1 << (GLYPH_W - 1 - c);
                    }
                }
            }
        }
        out
    })
}

// Each glyph is 7 rows x 5 columns, flattened row-major; '#' marks an
// on pixel. Covers ASCII 0x20..0x7e plus a fallback box at the end.
#[rustfmt::skip]
const GLYPHS: [&str; 96] = [
    // ' '
    ".....\
     .....\
     .....\
     .....\
     .....\
     .....\
     .....",
    // '!'
    "..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     .....\
     ..#..",
    // '"'
    ".#.#.\
     .#.#.\
     .#.#.\
     .....\
     .....\
     .....\
     .....",
    // '#'
    ".#.#.\
     .#.#.\
     #####\
     .#.#.\
     #####\
     .#.#.\
     .#.#.",
    // '$'
    "..#..\
     .####\
     #.#..\
     .###.\
     ..#.#\
     ####.\
     ..#..",
    // '%'
    "##..#\
     ##..#\
     ...#.\
     ..#..\
     .#...\
     #..##\
     #..##",
    // '&'
    ".##..\
     #..#.\
     #.#..\
     .#...\
     #.#.#\
     #..#.\
     .##.#",
    // '\''
    "..#..\
     ..#..\
     ..#..\
     .....\
     .....\
     .....\
     .....",
    // '('
    "...#.\
     ..#..\
     .#...\
     .#...\
     .#...\
     ..#..\
     ...#.",
    // ')'
    ".#...\
     ..#..\
     ...#.\
     ...#.\
     ...#.\
     ..#..\
     .#...",
    // '*'
    ".....\
     ..#..\
     #.#.#\
     .###.\
     #.#.#\
     ..#..\
     .....",
    // '+'
    ".....\
     ..#..\
     ..#..\
     #####\
     ..#..\
     ..#..\
     .....",
    // ','
    ".....\
     .....\
     .....\
     .....\
     ..##.\
     ..#..\
     .#...",
    // '-'
    ".....\
     .....\
     .....\
     #####\
     .....\
     .....\
     .....",
    // '.'
    ".....\
     .....\
     .....\
     .....\
     .....\
     .##..\
     .##..",
    // '/'
    "....#\
     ....#\
     ...#.\
     ..#..\
     .#...\
     #....\
     #....",
    // '0'
    ".###.\
     #...#\
     #..##\
     #.#.#\
     ##..#\
     #...#\
     .###.",
    // '1'
    "..#..\
     .##..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     .###.",
    // '2'
    ".###.\
     #...#\
     ....#\
     ...#.\
     ..#..\
     .#...\
     #####",
    // '3'
    ".###.\
     #...#\
     ....#\
     ..##.\
     ....#\
     #...#\
     .###.",
    // '4'
    "...#.\
     ..##.\
     .#.#.\
     #..#.\
     #####\
     ...#.\
     ...#.",
    // '5'
    "#####\
     #....\
     ####.\
     ....#\
     ....#\
     #...#\
     .###.",
    // '6'
    ".###.\
     #....\
     #....\
     ####.\
     #...#\
     #...#\
     .###.",
    // '7'
    "#####\
     ....#\
     ...#.\
     ..#..\
     ..#..\
     ..#..\
     ..#..",
    // '8'
    ".###.\
     #...#\
     #...#\
     .###.\
     #...#\
     #...#\
     .###.",
    // '9'
    ".###.\
     #...#\
     #...#\
     .####\
     ....#\
     ....#\
     .###.",
    // ':'
    ".....\
     .##..\
     .##..\
     .....\
     .##..\
     .##..\
     .....",
    // ';'
    ".....\
     .##..\
     .##..\
     .....\
     .##..\
     .#...\
     #....",
    // '<'
    "...#.\
     ..#..\
     .#...\
     #....\
     .#...\
     ..#..\
     ...#.",
    // '='
    ".....\
     .....\
     #####\
     .....\
     #####\
     .....\
     .....",
    // '>'
    ".#...\
     ..#..\
     ...#.\
     ....#\
     ...#.\
     ..#..\
     .#...",
    // '?'
    ".###.\
     #...#\
     ....#\
     ...#.\
     ..#..\
     .....\
     ..#..",
    // '@'
    ".###.\
     #...#\
     #.###\
     #.#.#\
     #.###\
     #....\
     .###.",
    // 'A'
    ".###.\
     #...#\
     #...#\
     #####\
     #...#\
     #...#\
     #...#",
    // 'B'
    "####.\
     #...#\
     #...#\
     ####.\
     #...#\
     #...#\
     ####.",
    // 'C'
    ".###.\
     #...#\
     #....\
     #....\
     #....\
     #...#\
     .###.",
    // 'D'
    "####.\
     #...#\
     #...#\
     #...#\
     #...#\
     #...#\
     ####.",
    // 'E'
    "#####\
     #....\
     #....\
     ####.\
     #....\
     #....\
     #####",
    // 'F'
    "#####\
     #....\
     #....\
     ####.\
     #....\
     #....\
     #....",
    // 'G'
    ".###.\
     #...#\
     #....\
     #.###\
     #...#\
     #...#\
     .###.",
    // 'H'
    "#...#\
     #...#\
     #...#\
     #####\
     #...#\
     #...#\
     #...#",
    // 'I'
    ".###.\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     .###.",
    // 'J'
    "..###\
     ...#.\
     ...#.\
     ...#.\
     ...#.\
     #..#.\
     .##..",
    // 'K'
    "#...#\
     #..#.\
     #.#..\
     ##...\
     #.#..\
     #..#.\
     #...#",
    // 'L'
    "#....\
     #....\
     #....\
     #....\
     #....\
     #....\
     #####",
    // 'M'
    "#...#\
     ##.##\
     #.#.#\
     #.#.#\
     #...#\
     #...#\
     #...#",
    // 'N'
    "#...#\
     ##..#\
     #.#.#\
     #..##\
     #...#\
     #...#\
     #...#",
    // 'O'
    ".###.\
     #...#\
     #...#\
     #...#\
     #...#\
     #...#\
     .###.",
    // 'P'
    "####.\
     #...#\
     #...#\
     ####.\
     #....\
     #....\
     #....",
    // 'Q'
    ".###.\
     #...#\
     #...#\
     #...#\
     #.#.#\
     #..#.\
     .##.#",
    // 'R'
    "####.\
     #...#\
     #...#\
     ####.\
     #.#..\
     #..#.\
     #...#",
    // 'S'
    ".####\
     #....\
     #....\
     .###.\
     ....#\
     ....#\
     ####.",
    // 'T'
    "#####\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..",
    // 'U'
    "#...#\
     #...#\
     #...#\
     #...#\
     #...#\
     #...#\
     .###.",
    // 'V'
    "#...#\
     #...#\
     #...#\
     #...#\
     #...#\
     .#.#.\
     ..#..",
    // 'W'
    "#...#\
     #...#\
     #...#\
     #.#.#\
     #.#.#\
     ##.##\
     #...#",
    // 'X'
    "#...#\
     #...#\
     .#.#.\
     ..#..\
     .#.#.\
     #...#\
     #...#",
    // 'Y'
    "#...#\
     #...#\
     .#.#.\
     ..#..\
     ..#..\
     ..#..\
     ..#..",
    // 'Z'
    "#####\
     ....#\
     ...#.\
     ..#..\
     .#...\
     #....\
     #####",
    // '['
    ".###.\
     .#...\
     .#...\
     .#...\
     .#...\
     .#...\
     .###.",
    // '\\'
    "#....\
     #....\
     .#...\
     ..#..\
     ...#.\
     ....#\
     ....#",
    // ']'
    ".###.\
     ...#.\
     ...#.\
     ...#.\
     ...#.\
     ...#.\
     .###.",
    // '^'
    "..#..\
     .#.#.\
     #...#\
     .....\
     .....\
     .....\
     .....",
    // '_'
    ".....\
     .....\
     .....\
     .....\
     .....\
     .....\
     #####",
    // '`'
    ".#...\
     ..#..\
     .....\
     .....\
     .....\
     .....\
     .....",
    // 'a'
    ".....\
     .....\
     .###.\
     ....#\
     .####\
     #...#\
     .####",
    // 'b'
    "#....\
     #....\
     ####.\
     #...#\
     #...#\
     #...#\
     ####.",
    // 'c'
    ".....\
     .....\
     .###.\
     #....\
     #....\
     #...#\
     .###.",
    // 'd'
    "....#\
     ....#\
     .####\
     #...#\
     #...#\
     #...#\
     .####",
    // 'e'
    ".....\
     .....\
     .###.\
     #...#\
     #####\
     #....\
     .###.",
    // 'f'
    "..##.\
     .#..#\
     .#...\
     ###..\
     .#...\
     .#...\
     .#...",
    // 'g'
    ".....\
     .####\
     #...#\
     #...#\
     .####\
     ....#\
     .###.",
    // 'h'
    "#....\
     #....\
     ####.\
     #...#\
     #...#\
     #...#\
     #...#",
    // 'i'
    "..#..\
     .....\
     .##..\
     ..#..\
     ..#..\
     ..#..\
     .###.",
    // 'j'
    "...#.\
     .....\
     ..##.\
     ...#.\
     ...#.\
     #..#.\
     .##..",
    // 'k'
    "#....\
     #....\
     #..#.\
     #.#..\
     ##...\
     #.#..\
     #..#.",
    // 'l'
    ".##..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     .###.",
    // 'm'
    ".....\
     .....\
     ##.#.\
     #.#.#\
     #.#.#\
     #.#.#\
     #.#.#",
    // 'n'
    ".....\
     .....\
     ####.\
     #...#\
     #...#\
     #...#\
     #...#",
    // 'o'
    ".....\
     .....\
     .###.\
     #...#\
     #...#\
     #...#\
     .###.",
    // 'p'
    ".....\
     ####.\
     #...#\
     #...#\
     ####.\
     #....\
     #....",
    // 'q'
    ".....\
     .####\
     #...#\
     #...#\
     .####\
     ....#\
     ....#",
    // 'r'
    ".....\
     .....\
     #.##.\
     ##..#\
     #....\
     #....\
     #....",
    // 's'
    ".....\
     .....\
     .####\
     #....\
     .###.\
     ....#\
     ####.",
    // 't'
    ".#...\
     .#...\
     ###..\
     .#...\
     .#...\
     .#..#\
     ..##.",
    // 'u'
    ".....\
     .....\
     #...#\
     #...#\
     #...#\
     #...#\
     .####",
    // 'v'
    ".....\
     .....\
     #...#\
     #...#\
     #...#\
     .#.#.\
     ..#..",
    // 'w'
    ".....\
     .....\
     #...#\
     #...#\
     #.#.#\
     #.#.#\
     .#.#.",
    // 'x'
    ".....\
     .....\
     #...#\
     .#.#.\
     ..#..\
     .#.#.\
     #...#",
    // 'y'
    ".....\
     #...#\
     #...#\
     #...#\
     .####\
     ....#\
     .###.",
    // 'z'
    ".....\
     .....\
     #####\
     ...#.\
     ..#..\
     .#...\
     #####",
    // '{'
    "...#.\
     ..#..\
     ..#..\
     .#...\
     ..#..\
     ..#..\
     ...#.",
    // '|'
    "..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..\
     ..#..",
    // '}'
    ".#...\
     ..#..\
     ..#..\
     ...#.\
     ..#..\
     ..#..\
     .#...",
    // '~'
    ".....\
     .....\
     .#...\
     #.#.#\
     ...#.\
     .....\
     .....",
    // fallback box
    "#####\
     #...#\
     #...#\
     #...#\
     #...#\
     #...#\
     #####",
];
