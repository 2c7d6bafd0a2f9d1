/**
 * Dependency-free SVG line plotting: linear scales, nice ticks, legends.
 *
 * Styling is intentionally plain; the contract is data fidelity, so the
 * curve geometry is produced deterministically from the inputs (fixed
 * palette, fixed downsampling stride).
 */

export interface Curve {
    label: string;
    x: number[];
    y: number[];
}

export interface Panel {
    title: string;
    xLabel: string;
    yLabel: string;
    curves: Curve[];
    row: number;
    col: number;
}

const PALETTE = [
    '#1f77b4',
    '#d62728',
    '#2ca02c',
    '#9467bd',
    '#ff7f0e',
    '#8c564b',
    '#17becf',
    '#7f7f7f',
];

const PANEL_WIDTH = 460;
const PANEL_HEIGHT = 330;
const MARGIN = { top: 34, right: 16, bottom: 46, left: 64 };
const MAX_POINTS = 2500;

/** Round bounds outward to a "nice" step, 1-2-5 ladder. */
export function niceTicks(min: number, max: number, target = 6): number[] {
    if (!(max > min)) {
        max = min + 1;
    }
    const span = max - min;
    const rawStep = span / Math.max(1, target - 1);
    const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
    const candidates = [1, 2, 5, 10].map((m) => m * power);
    const step = candidates.find((c) => span / c <= target - 1) ?? candidates[3];
    const start = Math.ceil(min / step) * step;
    const ticks: number[] = [];
    for (let v = start; v <= max + step * 1e-9; v += step) {
        ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return ticks;
}

function formatTick(value: number): string {
    if (value === 0) return '0';
    const magnitude = Math.abs(value);
    if (magnitude >= 1e4 || magnitude < 1e-3) return value.toExponential(0);
    return String(Number(value.toPrecision(6)));
}

function escapeXml(text: string): string {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;');
}

function renderPanel(panel: Panel): string {
    const x0 = panel.col * PANEL_WIDTH;
    const y0 = panel.row * PANEL_HEIGHT;
    const plotW = PANEL_WIDTH - MARGIN.left - MARGIN.right;
    const plotH = PANEL_HEIGHT - MARGIN.top - MARGIN.bottom;

    const allX = panel.curves.flatMap((c) => c.x);
    const allY = panel.curves.flatMap((c) => c.y);
    const xMin = Math.min(...allX);
    const xMax = Math.max(...allX);
    let yMin = Math.min(...allY);
    let yMax = Math.max(...allY);
    if (yMax === yMin) {
        yMax = yMin + 1;
    }
    const pad = 0.05 * (yMax - yMin);
    yMin -= pad;
    yMax += pad;

    const sx = (v: number) => MARGIN.left + ((v - xMin) / (xMax - xMin)) * plotW;
    const sy = (v: number) => MARGIN.top + plotH - ((v - yMin) / (yMax - yMin)) * plotH;

    const parts: string[] = [];
    parts.push(`<g transform="translate(${x0},${y0})">`);
    parts.push(
        `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
            'fill="none" stroke="#333" stroke-width="1"/>'
    );
    parts.push(
        `<text x="${MARGIN.left + plotW / 2}" y="${MARGIN.top - 12}" text-anchor="middle" ` +
            `font-size="13" font-family="sans-serif">${escapeXml(panel.title)}</text>`
    );

    for (const tick of niceTicks(xMin, xMax)) {
        const px = sx(tick);
        parts.push(
            `<line x1="${px.toFixed(2)}" y1="${MARGIN.top + plotH}" x2="${px.toFixed(2)}" ` +
                `y2="${MARGIN.top + plotH + 5}" stroke="#333"/>`,
            `<text x="${px.toFixed(2)}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" ` +
                `font-size="10" font-family="sans-serif">${formatTick(tick)}</text>`
        );
    }
    for (const tick of niceTicks(yMin, yMax)) {
        const py = sy(tick);
        parts.push(
            `<line x1="${MARGIN.left - 5}" y1="${py.toFixed(2)}" x2="${MARGIN.left}" ` +
                `y2="${py.toFixed(2)}" stroke="#333"/>`,
            `<text x="${MARGIN.left - 8}" y="${(py + 3).toFixed(2)}" text-anchor="end" ` +
                `font-size="10" font-family="sans-serif">${formatTick(tick)}</text>`
        );
    }
    parts.push(
        `<text x="${MARGIN.left + plotW / 2}" y="${PANEL_HEIGHT - 10}" text-anchor="middle" ` +
            `font-size="12" font-family="sans-serif">${escapeXml(panel.xLabel)}</text>`,
        `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="12" ` +
            `font-family="sans-serif" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
            `${escapeXml(panel.yLabel)}</text>`
    );

    panel.curves.forEach((curve, index) => {
        const stride = Math.max(1, Math.ceil(curve.x.length / MAX_POINTS));
        const points: string[] = [];
        for (let i = 0; i < curve.x.length; i += stride) {
            points.push(`${sx(curve.x[i]).toFixed(2)},${sy(curve.y[i]).toFixed(2)}`);
        }
        const last = curve.x.length - 1;
        if (last % stride !== 0) {
            points.push(`${sx(curve.x[last]).toFixed(2)},${sy(curve.y[last]).toFixed(2)}`);
        }
        const color = PALETTE[index % PALETTE.length];
        parts.push(
            `<polyline fill="none" stroke="${color}" stroke-width="1.3" ` +
                `points="${points.join(' ')}" data-curve="${escapeXml(curve.label)}"/>`
        );
        const lx = MARGIN.left + plotW - 10;
        const ly = MARGIN.top + 14 + index * 14;
        parts.push(
            `<line x1="${lx - 26}" y1="${ly - 4}" x2="${lx - 8}" y2="${ly - 4}" ` +
                `stroke="${color}" stroke-width="2"/>`,
            `<text x="${lx - 30}" y="${ly}" text-anchor="end" font-size="10" ` +
                `font-family="sans-serif">${escapeXml(curve.label)}</text>`
        );
    });
    parts.push('</g>');
    return parts.join('\n');
}

export function renderSvg(panels: Panel[], rows: number, cols: number): string {
    const width = cols * PANEL_WIDTH;
    const height = rows * PANEL_HEIGHT;
    const body = panels.map(renderPanel).join('\n');
    return (
        `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}">\n` +
        `<rect width="${width}" height="${height}" fill="white"/>\n${body}\n</svg>\n`
    );
}
