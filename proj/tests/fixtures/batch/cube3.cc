cubecomplex v1
# The 3-cube; vertex names are coordinates.
vertex 000
vertex 100
vertex 010
vertex 110
vertex 001
vertex 101
vertex 011
vertex 111
edge 000 100
edge 000 010
edge 000 001
edge 100 110
edge 100 101
edge 010 110
edge 010 011
edge 001 101
edge 001 011
edge 110 111
edge 101 111
edge 011 111
