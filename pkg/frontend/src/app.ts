// Browser entry point: chat panel + 3D viewer + issue list wired to the
// session service. Pure consumer of the HTTP API; closing the tab never
// corrupts a session.

import * as THREE from "three";

import { ApiClient } from "./api.js";
import { ModelScene } from "./viewer.js";
import { UiSession } from "./session.js";
import type { IssueStore } from "./issues.js";
import type { TranscriptEntry } from "./transcript.js";

const SERVICE_URL = (window as { CHATBIM_URL?: string }).CHATBIM_URL ?? "http://127.0.0.1:8000";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const chatLog = el<HTMLDivElement>("chat-log");
const inputBox = el<HTMLTextAreaElement>("instruction");
const sendButton = el<HTMLButtonElement>("send");
const banner = el<HTMLDivElement>("banner");
const issueList = el<HTMLUListElement>("issues");
const pickReadout = el<HTMLDivElement>("pick-readout");
const canvas = el<HTMLCanvasElement>("viewer");

// -- three.js scene -------------------------------------------------------------

const renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
const scene = new THREE.Scene();
scene.background = new THREE.Color(0xf3f4f6);
const camera = new THREE.PerspectiveCamera(50, 1, 0.1, 2000);
camera.position.set(25, -30, 25);
camera.up.set(0, 0, 1);
camera.lookAt(10, 8, 0);
scene.add(new THREE.AmbientLight(0xffffff, 0.65));
const sun = new THREE.DirectionalLight(0xffffff, 1.2);
sun.position.set(40, -60, 80);
scene.add(sun);
scene.add(new THREE.GridHelper(100, 50));

const modelScene = new ModelScene();
scene.add(modelScene.group);

function resize(): void {
  const width = canvas.clientWidth || 800;
  const height = canvas.clientHeight || 600;
  renderer.setSize(width, height, false);
  camera.aspect = width / height;
  camera.updateProjectionMatrix();
}
window.addEventListener("resize", resize);
resize();

function animate(): void {
  requestAnimationFrame(animate);
  renderer.render(scene, camera);
}
animate();

// -- UI rendering ---------------------------------------------------------------

function appendEntry(entry: TranscriptEntry): void {
  const row = document.createElement("div");
  row.className = `entry entry-${entry.kind}`;
  row.style.borderLeft = `4px solid ${entry.color}`;
  const who = document.createElement("span");
  who.className = "role";
  who.style.color = entry.color;
  who.textContent = entry.role;
  const body = document.createElement("pre");
  body.textContent = entry.text;
  row.append(who, body);
  chatLog.append(row);
  chatLog.scrollTop = chatLog.scrollHeight;
}

function renderIssues(store: IssueStore): void {
  issueList.replaceChildren();
  if (store.isEmpty()) {
    const item = document.createElement("li");
    item.className = "issue-clear";
    item.textContent = "No issues.";
    issueList.append(item);
    return;
  }
  for (const issue of store.list()) {
    const item = document.createElement("li");
    item.className = "issue";
    item.textContent = issue.title;
    item.title = issue.description;
    item.addEventListener("click", () => {
      modelScene.setHighlight(issue.uuids);
      pickReadout.textContent = issue.uuids.length
        ? `Issue elements: ${issue.uuids.join(", ")}`
        : "Issue has no related elements.";
    });
    issueList.append(item);
  }
}

function showBanner(text: string, tone: "info" | "warn" | "error"): void {
  banner.textContent = text;
  banner.dataset.tone = tone;
  banner.style.display = text ? "block" : "none";
}

const api = new ApiClient(SERVICE_URL);
const session = new UiSession(api, {
  onEntry: appendEntry,
  onMesh: (mesh) => modelScene.load(mesh),
  onIssues: renderIssues,
  onBanner: showBanner,
  onStatus: (status) => {
    banner.dataset.status = status;
    sendButton.disabled = status === "running";
    if (status === "awaiting_human") {
      inputBox.placeholder = "The agents need your guidance; reply to resume...";
    } else if (status === "idle") {
      inputBox.placeholder = "Describe the building to create or change...";
    }
  },
});

// -- element picking ---------------------------------------------------------------

const raycaster = new THREE.Raycaster();
canvas.addEventListener("pointerdown", (pointer: PointerEvent) => {
  const bounds = canvas.getBoundingClientRect();
  const ndc = new THREE.Vector2(
    ((pointer.clientX - bounds.left) / bounds.width) * 2 - 1,
    -((pointer.clientY - bounds.top) / bounds.height) * 2 + 1,
  );
  raycaster.setFromCamera(ndc, camera);
  const hit = modelScene.pickAt(raycaster);
  if (!hit) {
    modelScene.setHighlight([]);
    pickReadout.textContent = "";
    return;
  }
  modelScene.setHighlight([hit.uuid]);
  pickReadout.textContent = `${hit.category} ${hit.uuid}`;
  const related = session.issues.rowsForElement(hit.uuid);
  if (related.length) {
    pickReadout.textContent += ` | ${related.length} related issue(s)`;
  }
  void api.setSelection(session.sessionId, [hit.uuid]);
});

// -- input ---------------------------------------------------------------------

async function submit(): Promise<void> {
  const text = inputBox.value.trim();
  if (!text) return;
  inputBox.value = "";
  showBanner("", "info");
  try {
    await session.sendInstruction(text);
  } catch (error) {
    showBanner(String(error), "error");
  }
}

sendButton.addEventListener("click", () => void submit());
inputBox.addEventListener("keydown", (key: KeyboardEvent) => {
  if (key.key === "Enter" && !key.shiftKey) {
    key.preventDefault();
    void submit();
  }
});

window.addEventListener("online", () => void session.resumeAfterDisconnect());

void session.connect().catch((error) => showBanner(`Cannot reach the service: ${error}`, "error"));
