/** Two-coloured progress bar geometry for criterion cells.
 *
 * The green part shows the served relative-quality fraction; the red part
 * fills the rest of the cell.  Width arithmetic is pixel-rounded so the
 * rendered ratio stays within one pixel of the fraction.
 */

export const REFERENCE_BAR_WIDTH = 100;

export function greenWidthPx(fraction: number, cellWidth: number = REFERENCE_BAR_WIDTH): number {
  if (!Number.isFinite(fraction) || fraction < 0 || fraction > 1) {
    throw new Error(`fraction must lie in [0, 1], got ${fraction}`);
  }
  return Math.round(fraction * cellWidth);
}

export function barMarkup(fraction: number, cellWidth: number = REFERENCE_BAR_WIDTH): string {
  const green = greenWidthPx(fraction, cellWidth);
  const red = cellWidth - green;
  return (
    `<span class="bar" style="width:${cellWidth}px">` +
    `<span class="bar-green" style="width:${green}px"></span>` +
    `<span class="bar-red" style="width:${red}px"></span>` +
    `</span>`
  );
}
