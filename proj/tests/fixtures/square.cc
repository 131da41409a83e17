cubecomplex v1
# A single square.
vertex a
vertex b
vertex c
vertex d
edge a b
edge a c
edge b d
edge c d
