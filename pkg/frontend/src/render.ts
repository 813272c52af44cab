import type {
  ClusterEntry,
  PeriodicQuiverJson,
  QuiverJson,
  Violation,
} from "./types.js";

export const TERM_TRUNCATION_LIMIT = 50;

export interface Point {
  x: number;
  y: number;
}

/**
 * Positions for one fundamental domain: mutable sites on the lower row,
 * frozen sites on the upper row, each ordered by id.
 */
export function layoutSites(quiver: PeriodicQuiverJson): Map<number, Point> {
  const mutable = quiver.sites.filter((s) => !s.frozen).map((s) => s.id).sort((a, b) => a - b);
  const frozen = quiver.sites.filter((s) => s.frozen).map((s) => s.id).sort((a, b) => a - b);
  const positions = new Map<number, Point>();
  const spacing = 90;
  mutable.forEach((id, i) => positions.set(id, { x: 60 + i * spacing, y: 200 }));
  frozen.forEach((id, i) => positions.set(id, { x: 60 + i * spacing, y: 70 }));
  return positions;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function arrowSvg(
  from: Point,
  to: Point,
  mult: number,
  shift: number,
  key: string,
): string {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const pad = 24;
  const x1 = from.x + (dx / len) * pad;
  const y1 = from.y + (dy / len) * pad;
  const x2 = to.x - (dx / len) * pad;
  const y2 = to.y - (dy / len) * pad;
  // bow multiple arrows/shifts so parallel classes stay distinguishable
  const midX = (x1 + x2) / 2 + (shift !== 0 ? 0 : 0) - dy / len * 12 * Math.sign(shift || 1);
  const midY = (y1 + y2) / 2 + dx / len * 12 * Math.sign(shift || 1);
  const label: string[] = [];
  if (mult > 1) label.push(`×${mult}`);
  const badge =
    shift !== 0
      ? `<g class="shift-badge" data-arrow="${key}">` +
        `<circle cx="${midX}" cy="${midY - 14}" r="11" />` +
        `<text x="${midX}" y="${midY - 10}">${shift > 0 ? "+" : ""}${shift}</text></g>`
      : "";
  const multLabel = label.length
    ? `<text class="mult-label" x="${midX + 10}" y="${midY + 4}">${label.join("")}</text>`
    : "";
  return (
    `<path class="arrow" data-arrow="${key}" marker-end="url(#arrowhead)" ` +
    `d="M ${x1} ${y1} Q ${midX} ${midY} ${x2} ${y2}" />` +
    badge +
    multLabel
  );
}

/** SVG for the fundamental domain: boxed frozen sites, shift badges on wrapping arrows. */
export function renderPeriodicQuiver(
  quiver: PeriodicQuiverJson,
  options: { witnessSites?: number[]; selectedOrbit?: number | null } = {},
): string {
  const positions = layoutSites(quiver);
  const witness = new Set(options.witnessSites ?? []);
  const parts: string[] = [];
  for (const arrow of quiver.arrows) {
    const from = positions.get(arrow.from);
    const to = positions.get(arrow.to);
    if (!from || !to) continue;
    parts.push(
      arrowSvg(from, to, arrow.mult, arrow.shift, `${arrow.from}-${arrow.to}@${arrow.shift}`),
    );
  }
  for (const site of quiver.sites) {
    const p = positions.get(site.id)!;
    const classes = ["site", site.frozen ? "frozen" : "mutable"];
    if (witness.has(site.id)) classes.push("witness");
    if (options.selectedOrbit === site.id) classes.push("selected");
    const shape = site.frozen
      ? `<rect x="${p.x - 18}" y="${p.y - 18}" width="36" height="36" />`
      : `<circle cx="${p.x}" cy="${p.y}" r="20" />`;
    parts.push(
      `<g class="${classes.join(" ")}" data-site="${site.id}" data-frozen="${site.frozen}">` +
        shape +
        `<text x="${p.x}" y="${p.y + 5}">${site.id}</text></g>`,
    );
  }
  const width = Math.max(...[...positions.values()].map((p) => p.x)) + 60;
  return (
    `<svg class="quiver periodic" viewBox="0 0 ${width} 270" data-period="${quiver.period}">` +
    `<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">` +
    `<path d="M0,0 L8,4 L0,8 z"/></marker></defs>` +
    parts.join("") +
    `</svg>`
  );
}

/** SVG for the folded quiver, same visual conventions minus shift badges. */
export function renderFoldedQuiver(quiver: QuiverJson): string {
  const mutable = quiver.vertices.filter((v) => !v.frozen);
  const frozen = quiver.vertices.filter((v) => v.frozen);
  const positions = new Map<string, Point>();
  mutable.forEach((v, i) => positions.set(v.id, { x: 60 + i * 90, y: 200 }));
  frozen.forEach((v, i) => positions.set(v.id, { x: 60 + i * 90, y: 70 }));
  const parts: string[] = [];
  for (const arrow of quiver.arrows) {
    const from = positions.get(arrow.from);
    const to = positions.get(arrow.to);
    if (!from || !to) continue;
    parts.push(arrowSvg(from, to, arrow.mult, 0, `${arrow.from}-${arrow.to}`));
  }
  for (const vertex of quiver.vertices) {
    const p = positions.get(vertex.id)!;
    const shape = vertex.frozen
      ? `<rect x="${p.x - 18}" y="${p.y - 18}" width="36" height="36" />`
      : `<circle cx="${p.x}" cy="${p.y}" r="20" />`;
    parts.push(
      `<g class="site ${vertex.frozen ? "frozen" : "mutable"}" data-vertex="${escapeHtml(vertex.id)}">` +
        shape +
        `<text x="${p.x}" y="${p.y + 5}">${escapeHtml(vertex.id)}</text></g>`,
    );
  }
  const width = Math.max(60, ...[...positions.values()].map((p) => p.x)) + 60;
  return `<svg class="quiver folded" viewBox="0 0 ${width} 270">${parts.join("")}</svg>`;
}

/** Truncate a rendered cluster variable beyond the term limit unless expanded. */
export function renderClusterEntry(
  site: string,
  entry: ClusterEntry,
  expanded: boolean,
): string {
  const needsTruncation = entry.termCount > TERM_TRUNCATION_LIMIT && !expanded;
  const body = needsTruncation
    ? escapeHtml(entry.rendered.split("+").slice(0, 5).join("+")) +
      ` &hellip; <button class="expand" data-expand="${escapeHtml(site)}">` +
      `show all ${entry.termCount} terms</button>`
    : escapeHtml(entry.rendered);
  return (
    `<div class="cluster-entry" data-site="${escapeHtml(site)}" data-terms="${entry.termCount}">` +
    `<span class="site-label">x[${escapeHtml(site)}]</span> = <span class="poly">${body}</span></div>`
  );
}

export function renderCluster(
  cluster: Record<string, ClusterEntry>,
  expandedSites: ReadonlySet<string>,
): string {
  return Object.keys(cluster)
    .sort((a, b) => Number(a) - Number(b))
    .map((site) => renderClusterEntry(site, cluster[site], expandedSites.has(site)))
    .join("");
}

export function renderWitnessToast(witness: number[], violations: Violation[]): string {
  const pairs = violations
    .map((v) => `{${v.pair.join(", ")}} (${escapeHtml(v.condition)})`)
    .join("; ");
  return (
    `<div class="toast violation" role="alert">mutation rejected &mdash; sequence ` +
    `[${witness.join(", ")}] breaks foldability at ${pairs}; state unchanged</div>`
  );
}

export function renderHistory(history: string[]): string {
  if (history.length === 0) return `<em>initial seed</em>`;
  return history
    .map((k, i) => `<span class="step" data-step="${i}">&mu;[${escapeHtml(k)}]</span>`)
    .join(" → ");
}

/** Sites implicated by the current violation toast, for highlighting. */
export function witnessSites(violations: Violation[]): number[] {
  const out = new Set<number>();
  for (const v of violations) for (const p of v.pair) out.add(Number(p));
  return [...out].sort((a, b) => a - b);
}
