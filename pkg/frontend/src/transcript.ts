import { roleColor } from "./colors.js";
import type { AgentEvent } from "./types.js";

export interface TranscriptEntry {
  sequence: number;
  role: string;
  kind: string;
  color: string;
  text: string;
}

function renderPayload(event: AgentEvent): string {
  const payload = event.payload ?? {};
  switch (event.kind) {
    case "message":
      return String(payload["text"] ?? "");
    case "code":
      return String(payload["source"] ?? "");
    case "interpreter_result":
      return String(payload["text"] ?? "");
    case "checker_report":
      return String(payload["text"] ?? "");
    case "loop_transition": {
      const loop = String(payload["loop"] ?? "?");
      const counter = payload["n"] ?? payload["t"];
      return counter === undefined ? `entering ${loop}` : `entering ${loop} (${counter})`;
    }
    case "human_required":
      return `Human input needed: ${String(payload["reason"] ?? "")}`;
    default:
      // forward compatibility: unknown kinds render as raw JSON
      return JSON.stringify(event);
  }
}

// Ordered, deduplicated view of a session's event stream. Reconnects replay
// history, so entries are keyed by sequence number and duplicates dropped.
export class TranscriptStore {
  private bySequence = new Map<number, TranscriptEntry>();

  add(event: AgentEvent): TranscriptEntry | null {
    if (this.bySequence.has(event.sequence)) return null;
    const entry: TranscriptEntry = {
      sequence: event.sequence,
      role: event.role,
      kind: event.kind,
      color: roleColor(event.role),
      text: renderPayload(event),
    };
    this.bySequence.set(event.sequence, entry);
    return entry;
  }

  addAll(events: AgentEvent[]): TranscriptEntry[] {
    const added: TranscriptEntry[] = [];
    for (const event of events) {
      const entry = this.add(event);
      if (entry) added.push(entry);
    }
    return added;
  }

  entries(): TranscriptEntry[] {
    return [...this.bySequence.values()].sort((a, b) => a.sequence - b.sequence);
  }

  lastSequence(): number {
    let last = 0;
    for (const sequence of this.bySequence.keys()) last = Math.max(last, sequence);
    return last;
  }

  clear(): void {
    this.bySequence.clear();
  }
}
