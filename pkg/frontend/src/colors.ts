// Role and category palettes. The mapping is a UI choice; keep it here so
// every surface (chat entries, legend, viewer) stays consistent.

export const ROLE_COLORS: Record<string, string> = {
  user: "#1f2937",
  instruction_enhancer: "#2563eb",
  architect: "#7c3aed",
  programmer: "#059669",
  reviewer: "#d97706",
  interpreter: "#0891b2",
  checker: "#dc2626",
  system: "#6b7280",
};

export const FALLBACK_ROLE_COLOR = "#6b7280";

export function roleColor(role: string): string {
  return ROLE_COLORS[role] ?? FALLBACK_ROLE_COLOR;
}

export const CATEGORY_COLORS: Record<string, number> = {
  wall: 0xd6cfc4,
  door: 0x8b5a2b,
  window: 0x60a5fa,
  slab: 0x9ca3af,
  roof: 0xb91c1c,
};

export const HIGHLIGHT_COLOR = 0xfde047;

export function categoryColor(category: string): number {
  return CATEGORY_COLORS[category] ?? 0xcccccc;
}
