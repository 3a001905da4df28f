import * as THREE from "three";

import { categoryColor, HIGHLIGHT_COLOR } from "./colors.js";
import type { MeshDocument } from "./types.js";

// Millimeter coordinates are large; scale the scene to meters for the camera.
const MM_TO_SCENE = 0.001;

export interface PickInfo {
  uuid: string;
  category: string;
}

// Builds and owns the model's scene group: one pickable mesh per element,
// colored by category, with uuid-keyed highlighting for issue rows.
export class ModelScene {
  readonly group = new THREE.Group();
  private byUuid = new Map<string, THREE.Mesh>();
  private highlighted = new Set<string>();

  load(document: MeshDocument): void {
    this.clear();
    for (const element of document.elements) {
      const geometry = new THREE.BufferGeometry();
      const positions = new Float32Array(element.positions.map((v) => v * MM_TO_SCENE));
      geometry.setAttribute("position", new THREE.BufferAttribute(positions, 3));
      geometry.setIndex(element.indices);
      geometry.computeVertexNormals();
      const material = new THREE.MeshLambertMaterial({
        color: categoryColor(element.category),
        side: THREE.DoubleSide,
      });
      const mesh = new THREE.Mesh(geometry, material);
      mesh.name = element.uuid;
      mesh.userData = { uuid: element.uuid, category: element.category } satisfies PickInfo;
      this.byUuid.set(element.uuid, mesh);
      this.group.add(mesh);
    }
  }

  clear(): void {
    for (const mesh of this.byUuid.values()) {
      this.group.remove(mesh);
      mesh.geometry.dispose();
      (mesh.material as THREE.Material).dispose();
    }
    this.byUuid.clear();
    this.highlighted.clear();
  }

  groupCount(): number {
    return this.byUuid.size;
  }

  uuids(): string[] {
    return [...this.byUuid.keys()];
  }

  pickInfo(uuid: string): PickInfo | null {
    const mesh = this.byUuid.get(uuid);
    return mesh ? (mesh.userData as PickInfo) : null;
  }

  // Picking by ray from a pointer event; returns the hit element, if any.
  pickAt(raycaster: THREE.Raycaster): PickInfo | null {
    const hits = raycaster.intersectObjects(this.group.children, false);
    const first = hits[0];
    return first ? (first.object.userData as PickInfo) : null;
  }

  setHighlight(uuids: string[]): void {
    const wanted = new Set(uuids);
    for (const [uuid, mesh] of this.byUuid) {
      const material = mesh.material as THREE.MeshLambertMaterial;
      if (wanted.has(uuid)) {
        material.color.setHex(HIGHLIGHT_COLOR);
        material.emissive.setHex(0x665500);
      } else {
        material.color.setHex(categoryColor((mesh.userData as PickInfo).category));
        material.emissive.setHex(0x000000);
      }
    }
    this.highlighted = wanted;
  }

  highlightedUuids(): string[] {
    return [...this.highlighted];
  }
}
