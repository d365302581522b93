// Pure viewBox arithmetic for the pan/zoom surface.

export interface ViewBox {
  x: number;
  y: number;
  w: number;
  h: number;
}

export function fitToBounds(
  minx: number,
  miny: number,
  maxx: number,
  maxy: number,
  margin = 0.05,
): ViewBox {
  let w = maxx - minx;
  let h = maxy - miny;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  const pad = margin * Math.max(w, h);
  return { x: minx - pad, y: miny - pad, w: w + 2 * pad, h: h + 2 * pad };
}

// zoom so the world point under the cursor stays put; fx, fy are the
// cursor's fractional position inside the element
export function zoomAt(vb: ViewBox, fx: number, fy: number, zoom: number): ViewBox {
  const mx = vb.x + fx * vb.w;
  const my = vb.y + fy * vb.h;
  const w = vb.w * zoom;
  const h = vb.h * zoom;
  return { x: mx - fx * w, y: my - fy * h, w, h };
}

export function panBy(
  vb: ViewBox,
  dxPixels: number,
  dyPixels: number,
  elementWidth: number,
  elementHeight: number,
): ViewBox {
  return {
    x: vb.x - (dxPixels * vb.w) / elementWidth,
    y: vb.y - (dyPixels * vb.h) / elementHeight,
    w: vb.w,
    h: vb.h,
  };
}

export function viewBoxAttr(vb: ViewBox): string {
  return `${vb.x} ${vb.y} ${vb.w} ${vb.h}`;
}
