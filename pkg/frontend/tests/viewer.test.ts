import { describe, expect, it } from "vitest";
import type * as THREE from "three";

import { categoryColor, HIGHLIGHT_COLOR } from "../src/colors.js";
import { ModelScene } from "../src/viewer.js";
import type { MeshDocument } from "../src/types.js";

function boxGroup(uuid: string, category: string): MeshDocument["elements"][number] {
  // a unit prism footprint (two triangles per face worth of data is enough
  // for scene assembly; geometry validity is the backend's business)
  return {
    uuid,
    category,
    positions: [0, 0, 0, 1000, 0, 0, 1000, 1000, 0, 0, 0, 3000, 1000, 0, 3000, 1000, 1000, 3000],
    indices: [0, 1, 2, 3, 4, 5],
  };
}

describe("ModelScene", () => {
  it("creates one pickable group per element with category colors", () => {
    const scene = new ModelScene();
    scene.load({ elements: [boxGroup("a", "wall"), boxGroup("b", "roof"), boxGroup("c", "slab")] });
    expect(scene.groupCount()).toBe(3);
    expect(scene.group.children).toHaveLength(3);
    expect(scene.pickInfo("b")).toEqual({ uuid: "b", category: "roof" });
    const mesh = scene.group.children.find((m) => m.name === "a");
    expect(mesh).toBeDefined();
    const material = (mesh as THREE.Mesh).material as THREE.MeshLambertMaterial;
    expect(material.color.getHex()).toBe(categoryColor("wall"));
  });

  it("highlights issue elements and restores colors", () => {
    const scene = new ModelScene();
    scene.load({ elements: [boxGroup("a", "wall"), boxGroup("b", "wall")] });
    scene.setHighlight(["a"]);
    const a = scene.group.children.find((m) => m.name === "a") as THREE.Mesh;
    const b = scene.group.children.find((m) => m.name === "b") as THREE.Mesh;
    expect((a.material as THREE.MeshLambertMaterial).color.getHex()).toBe(HIGHLIGHT_COLOR);
    expect((b.material as THREE.MeshLambertMaterial).color.getHex()).toBe(categoryColor("wall"));
    expect(scene.highlightedUuids()).toEqual(["a"]);
    scene.setHighlight([]);
    expect((a.material as THREE.MeshLambertMaterial).color.getHex()).toBe(categoryColor("wall"));
  });

  it("empty mesh produces an empty scene and reload clears old groups", () => {
    const scene = new ModelScene();
    scene.load({ elements: [boxGroup("a", "wall")] });
    scene.load({ elements: [] });
    expect(scene.groupCount()).toBe(0);
    expect(scene.group.children).toHaveLength(0);
  });
});
