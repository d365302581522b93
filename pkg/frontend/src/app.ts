// Page wiring: editor, parameter form, view surface, stats. All
// geometry comes from the service; this file only moves payloads
// between the network layer and the drawing helpers.

import { abortPending, ApiError, checkHealth, isAbort, requestMesh } from "./api.js";
import { chartSpec } from "./histograms.js";
import { domainBounds, MgParseError, parseMgText } from "./mgtext.js";
import {
  buildRequestParams,
  DEFAULT_FORM,
  validateParams,
  type ParamsForm,
} from "./params.js";
import {
  edgeSegments,
  loopShape,
  renderMode,
  segmentBounds,
  svgLoopMarkup,
  svgMeshMarkup,
  type Segment,
} from "./render.js";
import type { MeshResponse } from "./types.js";
import { fitToBounds, panBy, viewBoxAttr, zoomAt, type ViewBox } from "./view.js";

const SAMPLE_MG = `SEGMENT
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

interface UiState {
  form: ParamsForm;
  last: MeshResponse | null;
  lastSegments: Segment[];
  view: ViewBox;
  dirty: boolean;
  boundaryOnly: boolean;
  busy: boolean;
}

const state: UiState = {
  form: { ...DEFAULT_FORM },
  last: null,
  lastSegments: [],
  view: { x: 0, y: 0, w: 1, h: 1 },
  dirty: false,
  boundaryOnly: false,
  busy: false,
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const editor = el<HTMLTextAreaElement>("mg-editor");
const banner = el<HTMLDivElement>("banner");
const runButton = el<HTMLButtonElement>("run");
const previewButton = el<HTMLButtonElement>("preview");
const centerButton = el<HTMLButtonElement>("center");
const svg = el<HTMLElement>("mesh-svg") as unknown as SVGSVGElement;
const layer = el<HTMLElement>("mesh-layer") as unknown as SVGGElement;
const canvas = el<HTMLCanvasElement>("mesh-canvas");
const viewport = el<HTMLDivElement>("viewport");
const statsPanel = el<HTMLDivElement>("stats");
const warningsPanel = el<HTMLUListElement>("warnings");
const chartsPanel = el<HTMLDivElement>("charts");

function formFromInputs(): ParamsForm {
  return {
    spacing: el<HTMLInputElement>("spacing").value,
    method: el<HTMLSelectElement>("method").value as ParamsForm["method"],
    factor: el<HTMLInputElement>("factor").value,
    afm_version: el<HTMLSelectElement>("afm-version").value as ParamsForm["afm_version"],
    swap: el<HTMLSelectElement>("swap").value as ParamsForm["swap"],
    smoothing: el<HTMLInputElement>("smoothing").checked,
    use_spline: el<HTMLInputElement>("use-spline").checked,
    final_edge_check: el<HTMLInputElement>("final-edge-check").checked,
    max_nodes: el<HTMLInputElement>("max-nodes").value,
  };
}

function showErrors(errors: Record<string, string>): void {
  for (const field of ["spacing", "factor", "max-nodes"]) {
    const slot = el<HTMLSpanElement>(`err-${field}`);
    slot.textContent = errors[field.replace("-", "_")] ?? "";
  }
}

function refreshControls(): void {
  state.form = formFromInputs();
  const errors = validateParams(state.form);
  showErrors(errors);
  const empty = editor.value.trim() === "";
  runButton.disabled = state.busy || empty || Object.keys(errors).length > 0;
  previewButton.disabled = empty;
}

function setBanner(text: string, kind: "error" | "info" | ""): void {
  banner.textContent = text;
  banner.className = kind;
}

function highlightLine(line: number): void {
  const lines = editor.value.split("\n");
  if (line < 1 || line > lines.length) return;
  let start = 0;
  for (let i = 0; i < line - 1; i++) start += lines[i]!.length + 1;
  editor.focus();
  editor.setSelectionRange(start, start + lines[line - 1]!.length);
}

function applyView(): void {
  svg.setAttribute("viewBox", viewBoxAttr(state.view));
  const scale = state.view.w / Math.max(1, viewport.clientWidth);
  // keep hairlines hairline while zooming
  for (const node of layer.querySelectorAll<SVGElement>("line.interior")) {
    node.setAttribute("stroke-width", `${scale}`);
  }
  for (const node of layer.querySelectorAll<SVGElement>("line.boundary, path.loop")) {
    node.setAttribute("stroke-width", `${2 * scale}`);
  }
  if (canvas.style.display !== "none") drawCanvas();
}

function drawCanvas(): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const w = viewport.clientWidth;
  const h = viewport.clientHeight;
  canvas.width = w;
  canvas.height = h;
  ctx.clearRect(0, 0, w, h);
  const sx = w / state.view.w;
  const sy = h / state.view.h;
  const tx = (x: number) => (x - state.view.x) * sx;
  const ty = (y: number) => (y - state.view.y) * sy;
  for (const pass of [false, true]) {
    ctx.beginPath();
    for (const s of state.lastSegments) {
      if (s.boundary !== pass) continue;
      if (pass === false && state.boundaryOnly) continue;
      ctx.moveTo(tx(s.x1), ty(s.y1));
      ctx.lineTo(tx(s.x2), ty(s.y2));
    }
    ctx.strokeStyle = pass ? "#c03030" : "#607080";
    ctx.lineWidth = pass ? 1.6 : 0.8;
    ctx.stroke();
  }
}

function showMesh(response: MeshResponse): void {
  state.last = response;
  state.lastSegments = edgeSegments(response.mesh);
  const [minx, miny, maxx, maxy] = segmentBounds(state.lastSegments);
  state.view = fitToBounds(minx, miny, maxx, maxy);
  const mode = renderMode(response.mesh.edges.length);
  if (mode === "svg") {
    layer.innerHTML = svgMeshMarkup(state.lastSegments, 1);
    canvas.style.display = "none";
    svg.style.display = "";
  } else {
    layer.innerHTML = "";
    svg.style.display = "none";
    canvas.style.display = "";
  }
  svg.classList.toggle("boundary-only", state.boundaryOnly);
  applyView();
  showStats(response);
}

function showPreview(): void {
  let domain;
  try {
    domain = parseMgText(editor.value);
  } catch (err) {
    if (err instanceof MgParseError) {
      setBanner(err.message, "error");
      highlightLine(err.line);
    } else {
      setBanner(String(err), "error");
    }
    return;
  }
  setBanner("", "");
  state.last = null;
  state.lastSegments = [];
  const [minx, miny, maxx, maxy] = domainBounds(domain);
  state.view = fitToBounds(minx, -maxy, maxx, -miny);
  layer.innerHTML = svgLoopMarkup(domain.loops.map((l) => loopShape(l)), 1);
  canvas.style.display = "none";
  svg.style.display = "";
  applyView();
  statsPanel.innerHTML = domain.loops
    .map((l, i) => `<div>loop ${i + 1}: ${l.ccw ? "counterclockwise" : "clockwise"}</div>`)
    .join("");
  warningsPanel.innerHTML = "";
  chartsPanel.innerHTML = "";
}

function showStats(response: MeshResponse): void {
  const s = response.stats;
  statsPanel.innerHTML = [
    `<div>nodes: ${s.nodes}</div>`,
    `<div>edges: ${s.edges}</div>`,
    `<div>triangles: ${s.triangles}</div>`,
    `<div>loops: ${s.boundary_loops}, holes: ${s.holes}</div>`,
  ].join("");
  warningsPanel.innerHTML = response.warnings
    .map((w) => `<li><b>${w.code}</b> ${escapeHtml(w.message)}</li>`)
    .join("");
  chartsPanel.innerHTML = "";
  for (const [kind, h] of Object.entries(s.histograms)) {
    const spec = chartSpec(kind, h);
    const bars = spec.bars
      .map(
        (b) =>
          `<div class="bar-row"><span class="bar-label">${b.label}</span>` +
          `<span class="bar" style="width:${Math.round(b.frac * 100)}%"></span>` +
          `<span class="bar-count">${b.count}</span></div>`,
      )
      .join("");
    chartsPanel.insertAdjacentHTML(
      "beforeend",
      `<details class="chart"><summary>${spec.title} (n=${spec.population})</summary>` +
        `<div class="chart-rule">${escapeHtml(spec.rule)}</div>${bars}</details>`,
    );
  }
}

function escapeHtml(text: string): string {
  return text.replace(/[&<>"]/g, (c) =>
    c === "&" ? "&amp;" : c === "<" ? "&lt;" : c === ">" ? "&gt;" : "&quot;",
  );
}

async function run(): Promise<void> {
  state.form = formFromInputs();
  const errors = validateParams(state.form);
  showErrors(errors);
  if (Object.keys(errors).length > 0) return;
  state.busy = true;
  refreshControls();
  setBanner("meshing…", "info");
  try {
    const response = await requestMesh(editor.value, buildRequestParams(state.form));
    setBanner("", "");
    showMesh(response);
  } catch (err) {
    if (isAbort(err)) return; // a newer request took over
    if (err instanceof ApiError) {
      setBanner(err.message, "error");
      if (err.line !== null) highlightLine(err.line);
    } else {
      setBanner(`network failure: ${String(err)}`, "error");
    }
  } finally {
    state.busy = false;
    refreshControls();
  }
}

function centerView(): void {
  if (state.lastSegments.length > 0) {
    const [minx, miny, maxx, maxy] = segmentBounds(state.lastSegments);
    state.view = fitToBounds(minx, miny, maxx, maxy);
    applyView();
  } else {
    showPreview();
  }
}

function wireViewport(): void {
  let panning = false;
  let lastX = 0;
  let lastY = 0;
  viewport.addEventListener("mousedown", (e) => {
    panning = true;
    lastX = e.clientX;
    lastY = e.clientY;
    viewport.style.cursor = "grabbing";
  });
  window.addEventListener("mouseup", () => {
    panning = false;
    viewport.style.cursor = "grab";
  });
  viewport.addEventListener("mousemove", (e) => {
    if (!panning) return;
    state.view = panBy(
      state.view,
      e.clientX - lastX,
      e.clientY - lastY,
      viewport.clientWidth,
      viewport.clientHeight,
    );
    lastX = e.clientX;
    lastY = e.clientY;
    applyView();
  });
  viewport.addEventListener(
    "wheel",
    (e) => {
      e.preventDefault();
      const rect = viewport.getBoundingClientRect();
      const fx = (e.clientX - rect.left) / rect.width;
      const fy = (e.clientY - rect.top) / rect.height;
      state.view = zoomAt(state.view, fx, fy, e.deltaY < 0 ? 1 / 1.15 : 1.15);
      applyView();
    },
    { passive: false },
  );
}

function wireFileButtons(): void {
  el<HTMLInputElement>("load-mg").addEventListener("change", (e) => {
    const input = e.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    void file.text().then((text) => {
      editor.value = text;
      state.dirty = true;
      refreshControls();
    });
    input.value = "";
  });
  el<HTMLButtonElement>("save-mg").addEventListener("click", () => {
    download("boundary.mg", editor.value, "text/plain");
    state.dirty = false;
  });
  el<HTMLButtonElement>("save-json").addEventListener("click", () => {
    if (!state.last) return;
    download("mesh.json", JSON.stringify(state.last.mesh), "application/json");
  });
}

function download(name: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

function init(): void {
  editor.value = SAMPLE_MG;
  editor.addEventListener("input", () => {
    state.dirty = true;
    refreshControls();
  });
  for (const id of ["spacing", "factor", "max-nodes"]) {
    el<HTMLInputElement>(id).addEventListener("input", refreshControls);
  }
  for (const id of ["method", "afm-version", "swap"]) {
    el<HTMLSelectElement>(id).addEventListener("change", refreshControls);
  }
  for (const id of ["smoothing", "use-spline", "final-edge-check"]) {
    el<HTMLInputElement>(id).addEventListener("change", refreshControls);
  }
  el<HTMLInputElement>("boundary-only").addEventListener("change", (e) => {
    state.boundaryOnly = (e.target as HTMLInputElement).checked;
    svg.classList.toggle("boundary-only", state.boundaryOnly);
    if (canvas.style.display !== "none") drawCanvas();
  });
  runButton.addEventListener("click", () => void run());
  previewButton.addEventListener("click", showPreview);
  centerButton.addEventListener("click", centerView);
  wireViewport();
  wireFileButtons();
  window.addEventListener("beforeunload", (e) => {
    if (state.dirty) e.preventDefault();
  });
  window.addEventListener("unload", abortPending);
  void checkHealth().then((ok) => {
    if (!ok) setBanner("service unreachable; is `trigrid serve` running?", "error");
  });
  refreshControls();
  showPreview();
}

init();
