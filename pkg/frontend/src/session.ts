import { ApiClient, HttpError } from "./api.js";
import { IssueStore } from "./issues.js";
import { TranscriptStore, type TranscriptEntry } from "./transcript.js";
import type { AgentEvent, MeshDocument, Metrics, SessionStatus } from "./types.js";

export interface UiCallbacks {
  onEntry?: (entry: TranscriptEntry) => void;
  onMesh?: (mesh: MeshDocument) => void;
  onIssues?: (store: IssueStore) => void;
  onBanner?: (text: string, tone: "info" | "warn" | "error") => void;
  onStatus?: (status: SessionStatus) => void;
}

// Client-side session state: transcript ordering mirrors event sequence
// numbers, the mesh refreshes after every successful interpreter run, and a
// human_required event switches the input into resume mode.
export class UiSession {
  readonly transcript = new TranscriptStore();
  readonly issues = new IssueStore();
  sessionId = "";
  status: SessionStatus = "idle";
  awaitingHuman = false;
  lastMetrics: Metrics | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly callbacks: UiCallbacks = {},
  ) {}

  async connect(sessionId?: string): Promise<void> {
    this.sessionId = sessionId ?? (await this.api.createSession());
    const recorded = await this.api.fetchEvents(this.sessionId, 0);
    for (const event of recorded) await this.ingest(event, { refresh: false });
    await this.refreshModelViews();
    const info = await this.api.sessionInfo(this.sessionId);
    this.setStatus(info.status);
  }

  // Re-fetches anything missed after a dropped stream; sequence numbers
  // dedupe, so replays never duplicate entries.
  async resumeAfterDisconnect(): Promise<void> {
    const missed = await this.api.fetchEvents(this.sessionId, this.transcript.lastSequence());
    for (const event of missed) await this.ingest(event, { refresh: false });
    await this.refreshModelViews();
  }

  async sendInstruction(text: string): Promise<void> {
    if (!text.trim()) return;
    this.awaitingHuman = false;
    this.setStatus("running");
    try {
      await this.api.sendInstruction(this.sessionId, text, (event) => {
        void this.ingest(event, { refresh: false });
      });
    } catch (error) {
      if (error instanceof HttpError && error.status === 409) {
        this.callbacks.onBanner?.("Session is busy with another instruction.", "warn");
        return;
      }
      throw error;
    }
    await this.refreshModelViews();
    const info = await this.api.sessionInfo(this.sessionId);
    this.setStatus(info.status);
    if (info.status === "awaiting_human") {
      this.awaitingHuman = true;
      this.callbacks.onBanner?.("The agents stopped; reply to continue the session.", "warn");
    }
  }

  private async ingest(event: AgentEvent, options: { refresh: boolean }): Promise<void> {
    const entry = this.transcript.add(event);
    if (!entry) return; // duplicate after a resume
    this.callbacks.onEntry?.(entry);
    if (event.kind === "human_required") {
      this.awaitingHuman = true;
      this.setStatus("awaiting_human");
    }
    if (event.kind === "interpreter_result" && event.payload["ok"] === true && options.refresh) {
      await this.refreshModelViews();
    }
  }

  async refreshModelViews(): Promise<void> {
    const [mesh, issues, metrics] = await Promise.all([
      this.api.fetchMesh(this.sessionId),
      this.api.fetchIssues(this.sessionId),
      this.api.fetchMetrics(this.sessionId),
    ]);
    this.lastMetrics = metrics;
    this.issues.setFromBcf(issues);
    this.callbacks.onMesh?.(mesh);
    this.callbacks.onIssues?.(this.issues);
  }

  private setStatus(status: SessionStatus): void {
    this.status = status;
    this.callbacks.onStatus?.(status);
  }
}
