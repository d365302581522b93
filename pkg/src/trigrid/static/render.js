// Geometry -> drawable shapes. Everything here works on the mesh
// payload or the parsed boundary text; nothing touches the DOM, the app
// shell decides where the output lands (SVG markup or canvas strokes).
// SVG stays crisp but the DOM cost grows per element; past this many
// edges the app paints to a canvas instead
export const SVG_EDGE_LIMIT = 50000;
export function renderMode(edgeCount) {
    return edgeCount > SVG_EDGE_LIMIT ? "canvas" : "svg";
}
// world y points up, screen y points down; flip once here so the view
// math stays ordinary
export function edgeSegments(mesh) {
    const out = [];
    for (const [a, b, , , flag] of mesh.edges) {
        const pa = mesh.nodes[a];
        const pb = mesh.nodes[b];
        if (!pa || !pb)
            continue;
        // + 0 turns -0 into 0 so coordinates serialize cleanly
        out.push({
            x1: pa[0],
            y1: -pa[1] + 0,
            x2: pb[0],
            y2: -pb[1] + 0,
            boundary: flag !== 0,
        });
    }
    return out;
}
export function segmentBounds(segments) {
    let minx = Infinity, miny = Infinity, maxx = -Infinity, maxy = -Infinity;
    for (const s of segments) {
        minx = Math.min(minx, s.x1, s.x2);
        miny = Math.min(miny, s.y1, s.y2);
        maxx = Math.max(maxx, s.x1, s.x2);
        maxy = Math.max(maxy, s.y1, s.y2);
    }
    if (minx > maxx)
        return [0, 0, 1, 1];
    return [minx, miny, maxx, maxy];
}
export function svgMeshMarkup(segments, strokeWidth) {
    const parts = [];
    for (const s of segments) {
        if (s.boundary)
            continue;
        parts.push(`<line class="interior" x1="${s.x1}" y1="${s.y1}" x2="${s.x2}" y2="${s.y2}" stroke-width="${strokeWidth}"/>`);
    }
    // boundary last so it paints on top
    for (const s of segments) {
        if (!s.boundary)
            continue;
        parts.push(`<line class="boundary" x1="${s.x1}" y1="${s.y1}" x2="${s.x2}" y2="${s.y2}" stroke-width="${2 * strokeWidth}"/>`);
    }
    return parts.join("");
}
// a few arrows spread along the loop, each pointing the way the points
// run, so the winding is visible at a glance
export function loopShape(loop, arrowCount = 4) {
    const pts = loop.points.map(([x, y]) => [x, -y + 0]);
    const path = pts.map(([x, y], i) => `${i === 0 ? "M" : "L"}${x} ${y}`).join("") + "Z";
    const segLengths = [];
    let total = 0;
    for (let i = 0; i < pts.length; i++) {
        const [x1, y1] = pts[i];
        const [x2, y2] = pts[(i + 1) % pts.length];
        const len = Math.hypot(x2 - x1, y2 - y1);
        segLengths.push(len);
        total += len;
    }
    const arrows = [];
    if (total === 0)
        return { path, arrows, ccw: loop.ccw };
    for (let k = 0; k < arrowCount; k++) {
        let target = ((k + 0.5) / arrowCount) * total;
        for (let i = 0; i < pts.length; i++) {
            const len = segLengths[i];
            if (target > len) {
                target -= len;
                continue;
            }
            const [x1, y1] = pts[i];
            const [x2, y2] = pts[(i + 1) % pts.length];
            const t = len === 0 ? 0 : target / len;
            arrows.push({
                x: x1 + t * (x2 - x1),
                y: y1 + t * (y2 - y1),
                angle: (Math.atan2(y2 - y1, x2 - x1) * 180) / Math.PI,
            });
            break;
        }
    }
    return { path, arrows, ccw: loop.ccw };
}
export function svgLoopMarkup(shapes, strokeWidth) {
    const parts = [];
    for (const shape of shapes) {
        parts.push(`<path class="loop" d="${shape.path}" fill="none" stroke-width="${2 * strokeWidth}"/>`);
        for (const a of shape.arrows) {
            const size = 5 * strokeWidth;
            parts.push(`<path class="arrow" d="M0 0L${-size} ${size / 2}L${-size} ${-size / 2}Z" ` +
                `transform="translate(${a.x} ${a.y}) rotate(${a.angle})"/>`);
        }
    }
    return parts.join("");
}
