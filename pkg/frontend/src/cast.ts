/**
 * Cast draft editing: assigning raw words to entries, variant conflict
 * detection (mirroring the server's offender reporting), and undo.
 */

import type { CastEntry, Kind } from "./types.js";

export const MAX_VARIANT_WORDS = 4;

export interface Conflict {
  variant: string;
  /** [current owner, would-be claimant], the order the server reports. */
  owners: [string, string];
}

/** Case-folded word sequence used as the identity of a variant phrase. */
export function variantKey(phrase: string): string {
  const words = phrase.match(/\p{L}+(?:['’]\p{L}+)*/gu) ?? [];
  return words.map((w) => w.toLowerCase()).join(" ");
}

export function variantWordCount(phrase: string): number {
  const key = variantKey(phrase);
  return key === "" ? 0 : key.split(" ").length;
}

function cloneEntries(entries: CastEntry[]): CastEntry[] {
  return entries.map((e) => ({ ...e, variants: [...e.variants] }));
}

/**
 * Full-draft validation; returns every duplicate-variant conflict in
 * entry order, with owners listed as the server would name them.
 */
export function findConflicts(entries: CastEntry[]): Conflict[] {
  const owners = new Map<string, string>();
  const conflicts: Conflict[] = [];
  for (const entry of entries) {
    for (const variant of entry.variants) {
      const key = variantKey(variant);
      if (key === "") continue;
      const owner = owners.get(key);
      if (owner !== undefined && owner !== entry.canonical) {
        conflicts.push({ variant, owners: [owner, entry.canonical] });
      } else {
        owners.set(key, entry.canonical);
      }
    }
  }
  return conflicts;
}

export class CastEditor {
  private entriesNow: CastEntry[] = [];
  private history: CastEntry[][] = [];
  dirty = false;

  get entries(): CastEntry[] {
    return this.entriesNow;
  }

  /** Replace the draft with the server's accepted cast; clears history. */
  load(entries: CastEntry[]): void {
    this.entriesNow = cloneEntries(entries);
    this.history = [];
    this.dirty = false;
  }

  private snapshot(): void {
    this.history.push(cloneEntries(this.entriesNow));
  }

  undo(): boolean {
    const prev = this.history.pop();
    if (prev === undefined) return false;
    this.entriesNow = prev;
    this.dirty = this.history.length > 0;
    return true;
  }

  entry(canonical: string): CastEntry | undefined {
    return this.entriesNow.find((e) => e.canonical === canonical);
  }

  /**
   * Append `word` as a variant of `canonical` (creating the entry if
   * needed).  Returns null on success, or the blocking Conflict when
   * another entry already claims the phrase.
   */
  assignWord(word: string, canonical: string, kind: Kind = "character"): Conflict | null {
    const key = variantKey(word);
    if (key === "") {
      return { variant: word, owners: ["", canonical] };
    }
    for (const entry of this.entriesNow) {
      if (entry.canonical === canonical) continue;
      if (entry.variants.some((v) => variantKey(v) === key)) {
        return { variant: word, owners: [entry.canonical, canonical] };
      }
    }
    this.snapshot();
    const target = this.entry(canonical);
    if (target === undefined) {
      this.entriesNow.push({ canonical, kind, variants: [word] });
    } else if (!target.variants.some((v) => variantKey(v) === key)) {
      target.variants.push(word);
    }
    this.dirty = true;
    return null;
  }

  removeVariant(canonical: string, variant: string): void {
    const target = this.entry(canonical);
    if (target === undefined) return;
    this.snapshot();
    target.variants = target.variants.filter((v) => v !== variant);
    if (target.variants.length === 0) {
      this.entriesNow = this.entriesNow.filter((e) => e !== target);
    }
    this.dirty = true;
  }

  removeEntry(canonical: string): void {
    if (this.entry(canonical) === undefined) return;
    this.snapshot();
    this.entriesNow = this.entriesNow.filter((e) => e.canonical !== canonical);
    this.dirty = true;
  }

  setKind(canonical: string, kind: Kind): void {
    const target = this.entry(canonical);
    if (target === undefined || target.kind === kind) return;
    this.snapshot();
    target.kind = kind;
    this.dirty = true;
  }

  markSaved(): void {
    this.dirty = false;
  }
}

/** Serialize entries in the cast-file format the service saves to disk. */
export function formatCastFile(entries: CastEntry[]): string {
  if (entries.length === 0) return "";
  const lines = entries.map((e) => {
    const tag = e.kind === "character" ? "" : ` @${e.kind}`;
    return `${e.canonical}${tag}: ${e.variants.join(" | ")}`;
  });
  return lines.join("\n") + "\n";
}
