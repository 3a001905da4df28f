import type { BcfRecord } from "./types.js";

export interface IssueRow {
  title: string;
  description: string;
  uuids: string[];
}

export class IssueStore {
  private rows: IssueRow[] = [];

  setFromBcf(records: BcfRecord[]): void {
    this.rows = records.map((record) => ({
      title: record.Issue,
      description: record["Issue description"],
      uuids: record["Related element uuids"] ?? [],
    }));
  }

  list(): IssueRow[] {
    return [...this.rows];
  }

  isEmpty(): boolean {
    return this.rows.length === 0;
  }

  // Issue rows that reference a picked element, for viewer click-through.
  rowsForElement(uuid: string): IssueRow[] {
    return this.rows.filter((row) => row.uuids.includes(uuid));
  }
}
