/** SVG rendering of the nested move stack on a number line. */

import type { RowLayout } from "./board.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 1000;
const ROW_HEIGHT = 28;
const AXIS_HEIGHT = 34;

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

export interface BoardCallbacks {
  /** Fires with screen fractions 0..1 while a drag selection is made. */
  onDragSelect?: (startFrac: number, endFrac: number, done: boolean) => void;
}

export interface ExcludedMarker {
  x: number;
  label: string;
}

export function renderBoard(
  container: HTMLElement,
  rows: RowLayout[],
  excluded: ExcludedMarker[],
  viewLabels: { lo: string; hi: string },
  callbacks: BoardCallbacks = {},
): void {
  container.replaceChildren();
  const height = AXIS_HEIGHT + Math.max(rows.length, 1) * ROW_HEIGHT + 8;
  const svg = svgElement("svg", {
    viewBox: `0 0 ${WIDTH} ${height}`,
    class: "board-svg",
    preserveAspectRatio: "none",
  });

  // axis with exact endpoint labels for the zoom window
  const axisY = AXIS_HEIGHT - 12;
  svg.append(svgElement("line", {
    x1: 0, y1: axisY, x2: WIDTH, y2: axisY, class: "axis-line",
  }));
  const loLabel = svgElement("text", { x: 4, y: axisY - 6, class: "axis-label" });
  loLabel.textContent = viewLabels.lo;
  const hiLabel = svgElement("text", {
    x: WIDTH - 4, y: axisY - 6, class: "axis-label", "text-anchor": "end",
  });
  hiLabel.textContent = viewLabels.hi;
  svg.append(loLabel, hiLabel);

  rows.forEach((row, i) => {
    const y = AXIS_HEIGHT + i * ROW_HEIGHT;
    const rowClass = row.player === "Alice" ? "seg-alice" : "seg-bob";
    for (const seg of row.segments) {
      const rect = svgElement("rect", {
        x: seg.x * WIDTH,
        y: y + 4,
        width: Math.max(seg.width * WIDTH, 1.5),
        height: ROW_HEIGHT - 10,
        class: `${rowClass}${row.isCurrent ? " seg-current" : ""}`,
      });
      const title = svgElement("title", {});
      title.textContent = `${row.player} round ${row.index}: (${seg.loLabel}, ${seg.hiLabel})`;
      rect.append(title);
      svg.append(rect);
    }
    const tag = svgElement("text", { x: 2, y: y + ROW_HEIGHT - 10, class: "row-tag" });
    tag.textContent = `${row.player[0]}${row.index}`;
    svg.append(tag);
  });

  for (const marker of excluded) {
    const x = marker.x * WIDTH;
    const line = svgElement("line", {
      x1: x, y1: axisY - 4, x2: x, y2: height, class: "excluded-line",
    });
    const title = svgElement("title", {});
    title.textContent = `excluded: ${marker.label}`;
    line.append(title);
    svg.append(line);
  }

  if (callbacks.onDragSelect) {
    attachDrag(svg, callbacks.onDragSelect);
  }
  container.append(svg);
}

function attachDrag(
  svg: SVGSVGElement,
  onSelect: (startFrac: number, endFrac: number, done: boolean) => void,
): void {
  let start: number | null = null;
  const frac = (event: PointerEvent): number => {
    const rect = svg.getBoundingClientRect();
    return Math.min(Math.max((event.clientX - rect.left) / rect.width, 0), 1);
  };
  svg.addEventListener("pointerdown", (event) => {
    start = frac(event);
    svg.setPointerCapture(event.pointerId);
  });
  svg.addEventListener("pointermove", (event) => {
    if (start !== null) onSelect(start, frac(event), false);
  });
  svg.addEventListener("pointerup", (event) => {
    if (start !== null) onSelect(start, frac(event), true);
    start = null;
  });
}
