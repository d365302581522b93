import { describe, expect, it } from "vitest";

import { domainBounds, MgParseError, parseMgText } from "../src/mgtext.js";

const RECT = `SEGMENT
4
1 2 2 0
1 0.0 0.0
2 100.0 0.0
2 2 3 0
1 100.0 0.0
2 100.0 60.0
3 2 4 0
1 100.0 60.0
2 0.0 60.0
4 2 1 0
1 0.0 60.0
2 0.0 0.0
ENDRC
`;

// outer square plus a self-closing clockwise triangle inside it
const WITH_HOLE = `SEGMENT
5
1 2 2 0
1 0 0
2 1 0
2 2 3 0
1 1 0
2 1 1
3 2 4 0
1 1 1
2 0 1
4 2 1 0
1 0 1
2 0 0
5 4 5 0
1 0.5 0.5
2 0.4 0.3
3 0.3 0.5
4 0.5 0.5
ENDRC
`;

describe("parseMgText", () => {
  it("reads the rectangle into one counterclockwise loop", () => {
    const dom = parseMgText(RECT);
    expect(dom.segments).toHaveLength(4);
    expect(dom.segments.map((s) => s.next)).toEqual([2, 3, 4, 1]);
    expect(dom.loops).toHaveLength(1);
    const loop = dom.loops[0]!;
    expect(loop.segmentIds).toEqual([1, 2, 3, 4]);
    expect(loop.points).toEqual([
      [0, 0],
      [100, 0],
      [100, 60],
      [0, 60],
    ]);
    expect(loop.ccw).toBe(true);
  });

  it("keeps inner loops separate and sees their clockwise winding", () => {
    const dom = parseMgText(WITH_HOLE);
    expect(dom.loops).toHaveLength(2);
    expect(dom.loops[0]!.ccw).toBe(true);
    const inner = dom.loops[1]!;
    expect(inner.segmentIds).toEqual([5]);
    expect(inner.points).toHaveLength(3); // closing point dropped
    expect(inner.ccw).toBe(false);
  });

  it("rejects tabs with the offending line number", () => {
    const text = RECT.replace("1 2 2 0", "1\t2 2 0");
    try {
      parseMgText(text);
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(MgParseError);
      expect((err as MgParseError).line).toBe(3);
      expect((err as MgParseError).message).toContain("line 3");
    }
  });

  it("rejects structural damage", () => {
    expect(() => parseMgText("")).toThrow(MgParseError);
    expect(() => parseMgText("POLYGON\n1\n")).toThrow(/expected SEGMENT/);
    expect(() => parseMgText(RECT.replace("ENDRC", ""))).toThrow(/end of input/);
    expect(() => parseMgText(RECT.replace("2 2 3 0", "9 2 3 0"))).toThrow(/expected segment 2/);
    expect(() => parseMgText(RECT.replace("2 100.0 0.0", "7 100.0 0.0"))).toThrow(
      /expected point index/,
    );
    expect(() => parseMgText(RECT.replace("4 2 1 0", "4 2 8 0"))).toThrow(/missing segment/);
  });

  it("accepts blank lines between rows", () => {
    const padded = RECT.replace("2 2 3 0", "\n2 2 3 0\n");
    expect(parseMgText(padded).loops).toHaveLength(1);
  });
});

describe("domainBounds", () => {
  it("covers every segment point", () => {
    expect(domainBounds(parseMgText(RECT))).toEqual([0, 0, 100, 60]);
  });
});
