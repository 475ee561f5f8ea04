/** Small SVG scene builder: no DOM, just well-formed markup strings. */

export interface Attrs {
  [name: string]: string | number;
}

export function el(tag: string, attrs: Attrs, children: string[] = []): string {
  const rendered = Object.entries(attrs)
    .map(([k, v]) => `${k}="${String(v)}"`)
    .join(" ");
  if (children.length === 0) {
    return `<${tag} ${rendered}/>`;
  }
  return `<${tag} ${rendered}>${children.join("")}</${tag}>`;
}

export function text(x: number, y: number, content: string, attrs: Attrs = {}): string {
  const escaped = content
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
  return el("text", { x, y, "font-size": 11, "font-family": "sans-serif", ...attrs }, [escaped]);
}

export function svgDocument(width: number, height: number, children: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    el("rect", { x: 0, y: 0, width, height, fill: "white" }),
    ...children,
    "</svg>",
  ].join("\n");
}

/** Affine map from a data interval to a pixel interval. */
export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.range = range;
  return fn;
}

export function ticks(domain: [number, number], count = 5): number[] {
  const [lo, hi] = domain;
  if (lo === hi) return [lo];
  const step = (hi - lo) / (count - 1);
  return Array.from({ length: count }, (_, i) => lo + i * step);
}

export function axes(x: Scale, y: Scale, xLabel: string, yLabel: string): string[] {
  const [xr0, xr1] = x.range;
  const [yr0, yr1] = y.range;
  const parts: string[] = [
    el("line", { x1: xr0, y1: yr0, x2: xr1, y2: yr0, stroke: "black" }),
    el("line", { x1: xr0, y1: yr0, x2: xr0, y2: yr1, stroke: "black" }),
  ];
  for (const t of ticks(x.domain)) {
    const px = x(t);
    parts.push(el("line", { x1: px, y1: yr0, x2: px, y2: yr0 + 4, stroke: "black" }));
    parts.push(text(px - 10, yr0 + 16, formatTick(t)));
  }
  for (const t of ticks(y.domain)) {
    const py = y(t);
    parts.push(el("line", { x1: xr0 - 4, y1: py, x2: xr0, y2: py, stroke: "black" }));
    parts.push(text(xr0 - 34, py + 4, formatTick(t)));
  }
  parts.push(text((xr0 + xr1) / 2 - 10, yr0 + 32, xLabel));
  parts.push(
    text(12, (yr0 + yr1) / 2, yLabel, {
      transform: `rotate(-90 12 ${(yr0 + yr1) / 2})`,
    }),
  );
  return parts;
}

export function formatTick(value: number): string {
  if (Number.isInteger(value)) return String(value);
  return value.toPrecision(3).replace(/\.?0+$/, "");
}

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf",
];

/** Blue-to-yellow ramp for contour cell fills, t in [0, 1]. */
export function heatColor(t: number): string {
  const clamped = Math.max(0, Math.min(1, t));
  const stops: [number, number, number][] = [
    [48, 18, 59],
    [70, 107, 227],
    [40, 187, 236],
    [170, 220, 50],
    [249, 189, 38],
    [249, 32, 37],
  ];
  const pos = clamped * (stops.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.min(stops.length - 1, lo + 1);
  const f = pos - lo;
  const mix = stops[lo].map((c, i) => Math.round(c + (stops[hi][i] - c) * f));
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}
