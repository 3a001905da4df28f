# Step 1: Create Story Layers
ground_floor_uuid = create_story_layer("Ground Floor", 0, 1)
first_floor_uuid = create_story_layer("First Floor", 3000, 2)

# Step 2: Create Perimeter Walls on Ground Floor
set_active_story_layer("Ground Floor")
wall_A_uuid = create_wall((0, 0), (32000, 0), ground_floor_uuid)
wall_B_uuid = create_wall((32000, 0), (32000, 16000), ground_floor_uuid)
wall_C_uuid = create_wall((32000, 16000), (0, 16000), ground_floor_uuid)
wall_D_uuid = create_wall((0, 16000), (0, 0), ground_floor_uuid)

# Step 3: Create Internal Corridor Walls on Ground Floor
wall_E_uuid = create_wall((0, 6000), (32000, 6000), ground_floor_uuid)
wall_F_uuid = create_wall((0, 10000), (32000, 10000), ground_floor_uuid)

# Step 4: Create Room Dividing Walls on Ground Floor
wall_G_uuid = create_wall((8000, 0), (8000, 6000), ground_floor_uuid)
wall_H_uuid = create_wall((16000, 0), (16000, 6000), ground_floor_uuid)
wall_I_uuid = create_wall((24000, 0), (24000, 6000), ground_floor_uuid)
wall_J_uuid = create_wall((8000, 10000), (8000, 16000), ground_floor_uuid)
wall_K_uuid = create_wall((16000, 10000), (16000, 16000), ground_floor_uuid)
wall_L_uuid = create_wall((24000, 10000), (24000, 16000), ground_floor_uuid)

# Step 5: Add Doors to Rooms on Ground Floor
add_door_to_wall(wall_E_uuid, 0, 4000, "Room 1 Door")
add_door_to_wall(wall_E_uuid, 0, 12000, "Room 2 Door")
add_door_to_wall(wall_E_uuid, 0, 20000, "Room 3 Door")
add_door_to_wall(wall_E_uuid, 0, 28000, "Room 4 Door")
add_door_to_wall(wall_F_uuid, 0, 4000, "Room 5 Door")
add_door_to_wall(wall_F_uuid, 0, 12000, "Room 6 Door")
add_door_to_wall(wall_F_uuid, 0, 20000, "Room 7 Door")
add_door_to_wall(wall_F_uuid, 0, 28000, "Room 8 Door")

# Step 6: Add Windows to Rooms on Ground Floor
add_window_to_wall(wall_A_uuid, 1000, 4000, "Room 1 Window")
add_window_to_wall(wall_A_uuid, 1000, 12000, "Room 2 Window")
add_window_to_wall(wall_A_uuid, 1000, 20000, "Room 3 Window")
add_window_to_wall(wall_A_uuid, 1000, 28000, "Room 4 Window")
add_window_to_wall(wall_C_uuid, 1000, 4000, "Room 5 Window")
add_window_to_wall(wall_C_uuid, 1000, 12000, "Room 6 Window")
add_window_to_wall(wall_C_uuid, 1000, 20000, "Room 7 Window")
add_window_to_wall(wall_C_uuid, 1000, 28000, "Room 8 Window")

# Step 7: Duplicate Ground Floor Layout to First Floor
walls_to_duplicate = [wall_A_uuid, wall_B_uuid, wall_C_uuid, wall_D_uuid, wall_E_uuid, wall_F_uuid, wall_G_uuid, wall_H_uuid, wall_I_uuid, wall_J_uuid, wall_K_uuid, wall_L_uuid]
duplicated_walls_uuids = []
for wall_uuid in walls_to_duplicate:
    duplicated_walls_uuids.extend(duplicate_obj(wall_uuid, first_floor_uuid, 1))

# Step 8: Create Slabs for Each Floor
ground_floor_slab_profile = create_polygon([(0, 0), (32000, 0), (32000, 16000), (0, 16000)], ground_floor_uuid)
ground_floor_slab_uuid = create_slab(ground_floor_slab_profile, ground_floor_uuid)
set_slab_height(ground_floor_slab_uuid, 0)

first_floor_slab_profile = create_polygon([(0, 0), (32000, 0), (32000, 16000), (0, 16000)], first_floor_uuid)
first_floor_slab_uuid = create_slab(first_floor_slab_profile, first_floor_uuid)
set_slab_height(first_floor_slab_uuid, 3000)

# Step 9: Create Pitched Roof
set_active_story_layer("First Floor")
roof_profile = create_polygon([(0, 0), (32000, 0), (32000, 16000), (0, 16000)], first_floor_uuid)
roof_uuid = create_pitched_roof(roof_profile, first_floor_uuid, 30, 1000, 3000, 300)
set_pitched_roof_style(roof_uuid, "Sloped Wood Struct Insul Flat Clay Tile")

# Step 10: Set Wall Styles
for wall_uuid in walls_to_duplicate + duplicated_walls_uuids:
    set_wall_style(wall_uuid, "Brick Wall")
