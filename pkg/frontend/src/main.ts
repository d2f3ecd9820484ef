/** Page wiring for the curation workbench. */

import { ApiClient, ApiError } from "./api.js";
import { CastEditor, findConflicts, formatCastFile } from "./cast.js";
import { layout } from "./force.js";
import { edgeWidth, nodeRadius, ResponseGate, tablesText } from "./view.js";
import type { AnalyzeResponse, Kind, RawWord, UnitInfo } from "./types.js";

const qs = new URLSearchParams(window.location.search);
const api = new ApiClient(qs.get("api") ?? "http://127.0.0.1:8572");

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
};

const wordSearch = el<HTMLInputElement>("word-search");
const wordList = el<HTMLUListElement>("word-list");
const castList = el<HTMLUListElement>("cast-list");
const castStatus = el<HTMLSpanElement>("cast-status");
const conflictBox = el<HTMLDivElement>("conflict-box");
const targetInput = el<HTMLInputElement>("target-name");
const kindSelect = el<HTMLSelectElement>("target-kind");
const undoButton = el<HTMLButtonElement>("undo");
const saveButton = el<HTMLButtonElement>("save-cast");
const scopeSelect = el<HTMLSelectElement>("scope");
const kernelSelect = el<HTMLSelectElement>("kernel");
const windowInput = el<HTMLInputElement>("window");
const decayInput = el<HTMLInputElement>("decay");
const nodeSlider = el<HTMLInputElement>("node-threshold");
const edgeSlider = el<HTMLInputElement>("edge-threshold");
const nodeValue = el<HTMLSpanElement>("node-threshold-value");
const edgeValue = el<HTMLSpanElement>("edge-threshold-value");
const runButton = el<HTMLButtonElement>("run");
const runHint = el<HTMLSpanElement>("run-hint");
const tablesPanel = el<HTMLPreElement>("tables");
const canvas = el<HTMLCanvasElement>("graph");
const downloadDot = el<HTMLButtonElement>("download-dot");
const downloadCast = el<HTMLButtonElement>("download-cast");

const editor = new CastEditor();
const gate = new ResponseGate();
let savedVersion = 0;
let rawWords: RawWord[] = [];
let lastAnalysis: AnalyzeResponse | null = null;

function setStatus(text: string): void {
  castStatus.textContent = text;
}

function showConflict(text: string): void {
  conflictBox.textContent = text;
  conflictBox.hidden = text === "";
}

function refreshRunState(): void {
  const empty = editor.entries.length === 0;
  runButton.disabled = empty || editor.dirty;
  runHint.textContent = empty
    ? "add at least one name to the cast"
    : editor.dirty
      ? "save the cast before running"
      : "";
}

function renderWords(): void {
  const needle = wordSearch.value.trim().toLowerCase();
  wordList.replaceChildren(
    ...rawWords
      .filter((w) => w.folded.includes(needle))
      .slice(0, 400)
      .map((w) => {
        const li = document.createElement("li");
        const label = document.createElement("span");
        label.textContent = `${w.sample} (${w.count})`;
        const assign = document.createElement("button");
        assign.textContent = "assign";
        assign.addEventListener("click", () => {
          const target = targetInput.value.trim() || w.sample.toUpperCase();
          const conflict = editor.assignWord(w.sample, target, kindSelect.value as Kind);
          if (conflict) {
            showConflict(
              `variant '${conflict.variant}' claimed by both ${conflict.owners[0]} and ${conflict.owners[1]}`,
            );
          } else {
            showConflict("");
            renderCast();
          }
        });
        li.append(label, assign);
        return li;
      }),
  );
}

function renderCast(): void {
  castList.replaceChildren(
    ...editor.entries.map((entry) => {
      const li = document.createElement("li");
      const head = document.createElement("strong");
      head.textContent = entry.kind === "character" ? entry.canonical : `${entry.canonical} @${entry.kind}`;
      const drop = document.createElement("button");
      drop.textContent = "×";
      drop.title = "remove entry";
      drop.addEventListener("click", () => {
        editor.removeEntry(entry.canonical);
        renderCast();
      });
      li.append(head, drop);
      const variants = document.createElement("ul");
      variants.replaceChildren(
        ...entry.variants.map((variant) => {
          const vi = document.createElement("li");
          vi.textContent = variant + " ";
          const rm = document.createElement("button");
          rm.textContent = "−";
          rm.title = "remove variant";
          rm.addEventListener("click", () => {
            editor.removeVariant(entry.canonical, variant);
            renderCast();
          });
          vi.append(rm);
          return vi;
        }),
      );
      li.append(variants);
      return li;
    }),
  );
  const conflicts = findConflicts(editor.entries);
  if (conflicts.length > 0) {
    const first = conflicts[0]!;
    showConflict(`variant '${first.variant}' claimed by both ${first.owners[0]} and ${first.owners[1]}`);
  }
  setStatus(editor.dirty ? `editing (saved version ${savedVersion})` : `version ${savedVersion}`);
  refreshRunState();
}

function drawGraph(response: AnalyzeResponse): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const positions = new Map(
    layout(response.graph, width - 60, height - 60).map((p) => [p.name, { x: p.x + 30, y: p.y + 30 }]),
  );
  ctx.strokeStyle = "#7a8ca3";
  for (const edge of response.graph.edges) {
    const a = positions.get(edge.source);
    const b = positions.get(edge.target);
    if (!a || !b) continue;
    ctx.lineWidth = edgeWidth(edge.i);
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }
  ctx.textAlign = "center";
  for (const node of response.graph.nodes) {
    const p = positions.get(node.name);
    if (!p) continue;
    const r = nodeRadius(node.f);
    ctx.fillStyle = node.kind === "place" ? "#b7791f" : "#2b6cb0";
    ctx.beginPath();
    if (node.kind === "place") {
      ctx.rect(p.x - r, p.y - r, 2 * r, 2 * r);
    } else {
      ctx.arc(p.x, p.y, r, 0, 2 * Math.PI);
    }
    ctx.fill();
    ctx.fillStyle = "#1a202c";
    ctx.font = "12px sans-serif";
    ctx.fillText(`${node.name} ${node.f.toFixed(3)}`, p.x, p.y - r - 4);
  }
}

async function runAnalysis(): Promise<void> {
  const ticket = gate.begin();
  runButton.disabled = true;
  try {
    const unitRaw = scopeSelect.value;
    const response = await api.analyze({
      unit: unitRaw === "whole" ? null : Number(unitRaw),
      kernel: {
        kind: kernelSelect.value as "rect" | "exp",
        window: Number(windowInput.value),
        decay: Number(decayInput.value),
      },
      thresholds: {
        node_min: Number(nodeSlider.value),
        edge_min: Number(edgeSlider.value),
      },
    });
    if (!gate.accept(ticket, response.castVersion, savedVersion)) return;
    lastAnalysis = response;
    tablesPanel.textContent = tablesText(response);
    drawGraph(response);
  } catch (err) {
    showConflict(err instanceof ApiError ? err.message : String(err));
  } finally {
    refreshRunState();
  }
}

function download(name: string, text: string, type: string): void {
  const url = URL.createObjectURL(new Blob([text], { type }));
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

async function saveCast(): Promise<void> {
  const conflicts = findConflicts(editor.entries);
  if (conflicts.length > 0) {
    const first = conflicts[0]!;
    showConflict(`variant '${first.variant}' claimed by both ${first.owners[0]} and ${first.owners[1]}`);
    return;
  }
  try {
    const { version } = await api.putCast(editor.entries, savedVersion);
    savedVersion = version;
    editor.markSaved();
    showConflict("");
    renderCast();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      showConflict(`${err.message}; reload to pick up the newer cast`);
    } else {
      showConflict(err instanceof ApiError ? err.message : String(err));
    }
  }
}

async function boot(): Promise<void> {
  nodeValue.textContent = nodeSlider.value;
  edgeValue.textContent = edgeSlider.value;
  nodeSlider.addEventListener("input", () => (nodeValue.textContent = nodeSlider.value));
  edgeSlider.addEventListener("input", () => (edgeValue.textContent = edgeSlider.value));
  wordSearch.addEventListener("input", renderWords);
  undoButton.addEventListener("click", () => {
    if (editor.undo()) {
      showConflict("");
      renderCast();
    }
  });
  saveButton.addEventListener("click", () => void saveCast());
  runButton.addEventListener("click", () => void runAnalysis());
  downloadDot.addEventListener("click", () => {
    if (lastAnalysis) download("graph.gv", lastAnalysis.dot, "text/vnd.graphviz");
  });
  downloadCast.addEventListener("click", () => {
    download("cast.txt", formatCastFile(editor.entries), "text/plain");
  });

  const [units, cast, words] = await Promise.all([
    api.units(),
    api.getCast(),
    api.rawWords(3, true, 2),
  ]);
  scopeSelect.replaceChildren(
    new Option("whole work", "whole"),
    ...units.map((u: UnitInfo) => new Option(u.id, String(u.index))),
  );
  savedVersion = cast.version;
  editor.load(cast.entries);
  rawWords = words;
  renderWords();
  renderCast();
}

void boot().catch((err) => showConflict(`service unreachable: ${String(err)}`));
