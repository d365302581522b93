// Light parser for the boundary text format, just enough for the
// preview pane: loops, point coordinates, travel direction. The server
// stays the authority on acceptance; this one only has to agree with it
// on what is well-formed and where an error sits (1-based line numbers).
export class MgParseError extends Error {
    line;
    constructor(message, line) {
        super(`${message} (line ${line})`);
        this.line = line;
    }
}
function signedArea(points) {
    let acc = 0;
    for (let i = 0; i < points.length; i++) {
        const [x1, y1] = points[i];
        const [x2, y2] = points[(i + 1) % points.length];
        acc += x1 * y2 - x2 * y1;
    }
    return acc / 2;
}
export function parseMgText(text) {
    const rawLines = text.split("\n");
    rawLines.forEach((raw, i) => {
        if (raw.includes("\t"))
            throw new MgParseError("tab character", i + 1);
    });
    let pos = 0;
    const nextLine = () => {
        while (pos < rawLines.length) {
            const lineNo = pos + 1;
            const stripped = (rawLines[pos] ?? "").trim();
            pos++;
            if (stripped !== "")
                return [stripped, lineNo];
        }
        throw new MgParseError("unexpected end of input", rawLines.length);
    };
    const [keyword, kwLine] = nextLine();
    if (keyword.toUpperCase() !== "SEGMENT") {
        throw new MgParseError(`expected SEGMENT, got "${keyword}"`, kwLine);
    }
    const [countText, countLine] = nextLine();
    const count = Number(countText);
    if (!Number.isInteger(count) || count < 1) {
        throw new MgParseError("segment count must be a positive integer", countLine);
    }
    const segments = [];
    for (let s = 0; s < count; s++) {
        const [header, headerLine] = nextLine();
        const fields = header.split(/\s+/).map(Number);
        if (fields.length !== 4 || fields.some((f) => !Number.isInteger(f))) {
            throw new MgParseError("segment header needs 4 integers", headerLine);
        }
        const [id, npoints, next] = fields;
        if (id !== s + 1)
            throw new MgParseError(`expected segment ${s + 1}`, headerLine);
        if (npoints < 2)
            throw new MgParseError("segment needs at least 2 points", headerLine);
        const points = [];
        for (let k = 0; k < npoints; k++) {
            const [row, rowLine] = nextLine();
            const nums = row.split(/\s+/).map(Number);
            if (nums.length !== 3 || nums.some((n) => !Number.isFinite(n))) {
                throw new MgParseError("point row needs index, x, y", rowLine);
            }
            if (nums[0] !== k + 1) {
                throw new MgParseError(`expected point index ${k + 1}`, rowLine);
            }
            points.push([nums[1], nums[2]]);
        }
        segments.push({ id, next, points });
    }
    const [terminator, termLine] = nextLine();
    if (terminator.toUpperCase() !== "ENDRC") {
        throw new MgParseError(`expected ENDRC, got "${terminator}"`, termLine);
    }
    for (const seg of segments) {
        if (seg.next < 1 || seg.next > segments.length) {
            throw new MgParseError(`segment ${seg.id} links to missing segment ${seg.next}`, 1);
        }
    }
    const loops = [];
    const seen = new Set();
    for (const seg of segments) {
        if (seen.has(seg.id))
            continue;
        const ids = [];
        const points = [];
        let cur = seg;
        for (;;) {
            if (seen.has(cur.id)) {
                throw new MgParseError(`segment ${cur.id} is shared between loops`, 1);
            }
            seen.add(cur.id);
            ids.push(cur.id);
            // the joint point repeats at each handover; keep one copy
            points.push(...cur.points.slice(0, -1));
            if (cur.next === seg.id)
                break;
            cur = segments[cur.next - 1];
        }
        loops.push({ segmentIds: ids, points, ccw: signedArea(points) > 0 });
    }
    return { segments, loops };
}
export function domainBounds(domain) {
    let minx = Infinity, miny = Infinity, maxx = -Infinity, maxy = -Infinity;
    for (const seg of domain.segments) {
        for (const [x, y] of seg.points) {
            if (x < minx)
                minx = x;
            if (y < miny)
                miny = y;
            if (x > maxx)
                maxx = x;
            if (y > maxy)
                maxy = y;
        }
    }
    return [minx, miny, maxx, maxy];
}
