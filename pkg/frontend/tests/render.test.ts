import { describe, expect, it } from "vitest";

import { parseMgText } from "../src/mgtext.js";
import {
  edgeSegments,
  loopShape,
  renderMode,
  segmentBounds,
  SVG_EDGE_LIMIT,
  svgLoopMarkup,
  svgMeshMarkup,
} from "../src/render.js";
import type { MeshPayload } from "../src/types.js";

const TINY: MeshPayload = {
  nodes: [
    [0, 0],
    [2, 0],
    [0, 1],
  ],
  edges: [
    [0, 1, 0, -1, 1],
    [1, 2, 0, -1, 1],
    [2, 0, 0, -1, 1],
  ],
  triangles: [[0, 1, 2]],
};

describe("edgeSegments", () => {
  it("flips y and keeps the boundary flag", () => {
    const segs = edgeSegments(TINY);
    expect(segs).toHaveLength(3);
    expect(segs[1]).toEqual({ x1: 2, y1: 0, x2: 0, y2: -1, boundary: true });
  });

  it("interior edges come out unflagged", () => {
    const mesh: MeshPayload = {
      nodes: [
        [0, 0],
        [1, 1],
      ],
      edges: [[0, 1, 0, 1, 0]],
      triangles: [],
    };
    expect(edgeSegments(mesh)[0]!.boundary).toBe(false);
  });
});

describe("segmentBounds", () => {
  it("finds the extremes in flipped space", () => {
    expect(segmentBounds(edgeSegments(TINY))).toEqual([0, -1, 2, 0]);
  });

  it("empty input gets the unit box", () => {
    expect(segmentBounds([])).toEqual([0, 0, 1, 1]);
  });
});

describe("renderMode", () => {
  it("switches to canvas past the limit", () => {
    expect(renderMode(10)).toBe("svg");
    expect(renderMode(SVG_EDGE_LIMIT)).toBe("svg");
    expect(renderMode(SVG_EDGE_LIMIT + 1)).toBe("canvas");
  });
});

describe("svgMeshMarkup", () => {
  it("emits one line per edge", () => {
    const markup = svgMeshMarkup(edgeSegments(TINY), 1);
    const count = markup.split("<line").length - 1;
    expect(count).toBe(TINY.edges.length);
  });

  it("boundary lines are classed and doubly thick", () => {
    const mixed = [
      { x1: 0, y1: 0, x2: 1, y2: 0, boundary: true },
      { x1: 0, y1: 0, x2: 0, y2: 1, boundary: false },
    ];
    const markup = svgMeshMarkup(mixed, 0.5);
    expect(markup).toContain('class="interior"');
    expect(markup).toContain('class="boundary"');
    expect(markup).toContain('stroke-width="0.5"');
    expect(markup).toContain('stroke-width="1"');
    // boundary is emitted after interior so it draws on top
    expect(markup.indexOf('class="interior"')).toBeLessThan(
      markup.indexOf('class="boundary"'),
    );
  });
});

const RECT = `SEGMENT
4
1 2 2 0
1 0 0
2 4 0
2 2 3 0
1 4 0
2 4 4
3 2 4 0
1 4 4
2 0 4
4 2 1 0
1 0 4
2 0 0
ENDRC
`;

describe("loopShape", () => {
  it("walks the loop in source order with arrows along the travel", () => {
    const loop = parseMgText(RECT).loops[0]!;
    const shape = loopShape(loop, 4);
    expect(shape.ccw).toBe(true);
    expect(shape.path.startsWith("M0 0")).toBe(true);
    expect(shape.path.endsWith("Z")).toBe(true);
    expect(shape.arrows).toHaveLength(4);
    // perimeter 16, arrows at 2, 6, 10, 14: one per side
    const a = shape.arrows;
    expect(a[0]).toEqual({ x: 2, y: 0, angle: 0 });
    expect(a[1]!.x).toBeCloseTo(4);
    expect(a[1]!.angle).toBeCloseTo(-90); // screen y runs down, so CCW turns up
    expect(a[2]!.angle).toBeCloseTo(180);
    expect(a[3]!.angle).toBeCloseTo(90);
  });

  it("degenerate loops come back arrowless", () => {
    const shape = loopShape({ segmentIds: [1], points: [[1, 1]], ccw: false });
    expect(shape.arrows).toEqual([]);
  });
});

describe("svgLoopMarkup", () => {
  it("one path per loop plus one per arrow", () => {
    const loop = parseMgText(RECT).loops[0]!;
    const markup = svgLoopMarkup([loopShape(loop, 3)], 1);
    expect(markup.split('class="loop"').length - 1).toBe(1);
    expect(markup.split('class="arrow"').length - 1).toBe(3);
  });
});
